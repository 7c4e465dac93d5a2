#![no_main]

use homspace::finite::Suite;
use libfuzzer_sys::fuzz_target;

const S3_IRREPS: &str = "1 1 1\n1 -1 1\n2 0 -1\n";

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let resolve = |name: &str| match name {
        "s3.chars" => Ok(S3_IRREPS.to_string()),
        _ => Err(format!("no file {name}")),
    };
    if let Ok(suite) = Suite::parse(src, &resolve) {
        let report = suite.run();
        assert_eq!(report.checks_run, suite.len());
    }
});
