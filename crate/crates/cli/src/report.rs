use std::path::Path;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use homspace::Error;
use serde::Serialize;
use serde_json::Value;

pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Resource { .. } => EXIT_RESOURCE,
            Error::Parse(_)
            | Error::Malformed { .. }
            | Error::InvalidArgument(_)
            | Error::EmptyGenerators
            | Error::NotSymmetric
            | Error::NonzeroShift(_)
            | Error::NotNested(_)
            | Error::IdentityHasNoLevel => EXIT_USAGE,
            Error::GroupMismatch | Error::NonIntegral { .. } | Error::Axiom(_) => EXIT_VIOLATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
struct Meta {
    version: &'static str,
    timestamp: u64,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'static str,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
    report: &'a Value,
}

/// A finished run: the claim outcome plus its JSON body.
pub struct Report {
    pub command: &'static str,
    pub passed: bool,
    pub body: Value,
}

impl Report {
    pub fn new(command: &'static str, passed: bool, body: impl Serialize) -> Result<Report, Failure> {
        let body = serde_json::to_value(body).map_err(|e| Failure::usage(format!("cannot encode report: {e}")))?;
        Ok(Report { command, passed, body })
    }

    pub fn emit(&self, meta: bool, out: Option<&Path>) -> Result<ExitCode, Failure> {
        let meta = meta.then(|| Meta {
            version: env!("CARGO_PKG_VERSION"),
            timestamp: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
        });
        let envelope = Envelope {
            command: self.command,
            passed: self.passed,
            meta,
            report: &self.body,
        };
        let mut text = serde_json::to_string_pretty(&envelope).expect("reports are plain JSON values");
        text.push('\n');
        match out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        eprintln!("{}: {}", self.command, if self.passed { "PASS" } else { "FAIL" });
        Ok(if self.passed {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(EXIT_VIOLATION)
        })
    }
}
