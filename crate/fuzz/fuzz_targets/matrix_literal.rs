#![no_main]

use homspace::finite::{separation_witness, IntMatrix};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(a) = IntMatrix::parse(src) {
        assert_eq!(IntMatrix::parse(&a.to_string()).unwrap(), a);
        if let Ok(m) = separation_witness(&a) {
            assert!(!a.reduce(m as u32).is_identity());
        }
    }
});
