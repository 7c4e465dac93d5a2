//! `homspace`: batch verification of coset-space amenability claims.
//!
//! Every subcommand writes one JSON report (stdout or `--out`) and exits
//! with 0 on pass, 1 on a violated claim, 2 on usage or parse errors and
//! 3 when a resource cap is hit.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::Failure;

#[derive(Debug, Parser)]
#[command(name = "homspace", version, about = "Verify amenability claims on Z⋉F∞ coset spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Leave the version and timestamp out of the report.
    #[arg(long, global = true)]
    no_meta: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that δ at (n, e)F is exactly invariant under a finite word set.
    EymardVerify {
        /// Comma-separated words, e.g. "x5 x3 x5^-1, x1" (braces optional).
        words: String,
    },
    /// Lower bounds on the Markov operator norm of k free generators on H/F.
    Kesten {
        /// Number of free generators x1..xk.
        #[arg(long)]
        k: usize,
        /// Radii as "a..b" (inclusive) or a comma list.
        #[arg(long, default_value = "1..10")]
        radii: String,
        /// Maximum number of cosets in the orbit ball.
        #[arg(long)]
        cap: Option<usize>,
        /// Power-iteration steps per radius.
        #[arg(long, default_value_t = 20_000)]
        iterations: usize,
        /// Also write radius,nodes,estimate rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Build a Reiter certificate for G/F.
    Reiter {
        /// Comma-separated elements; `t^k` is (k; e), a bare word w is (0; w).
        gens: String,
        #[arg(long)]
        epsilon: f64,
        /// Largest window length to try.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Run a reciprocity suite (the bundled one when no path is given).
    Reciprocity {
        suite: Option<PathBuf>,
        /// Print the bundled suite source and exit.
        #[arg(long)]
        print_bundled: bool,
    },
    /// Order and classes of SL(n, Z/m), and optionally a separating modulus.
    Congruence {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Integer matrix in SL(n, Z), rows separated by '/', e.g. "1 6 / 0 1".
        #[arg(long)]
        witness: Option<String>,
        /// Largest group order to enumerate.
        #[arg(long)]
        cap: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let meta = !cli.no_meta;
    let outcome = match cli.command {
        Command::EymardVerify { words } => commands::eymard_verify(&words),
        Command::Kesten {
            k,
            radii,
            cap,
            iterations,
            csv,
        } => commands::kesten(k, &radii, cap, iterations, csv.as_deref()),
        Command::Reiter { gens, epsilon, window } => commands::reiter(&gens, epsilon, window),
        Command::Reciprocity { print_bundled: true, .. } => {
            print!("{}", homspace::finite::Suite::bundled_source());
            return ExitCode::SUCCESS;
        }
        Command::Reciprocity { suite, .. } => commands::reciprocity(suite.as_deref()),
        Command::Congruence { n, m, witness, cap } => commands::congruence(n, m, witness.as_deref(), cap),
    };
    match outcome.and_then(|r| r.emit(meta, cli.out.as_deref())) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
