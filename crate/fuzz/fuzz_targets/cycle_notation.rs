#![no_main]

use homspace::finite::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&deg, rest)) = data.split_first() else { return };
    let Ok(src) = std::str::from_utf8(rest) else { return };
    let degree = usize::from(deg % 32) + 1;
    if let Ok(p) = Permutation::parse_cycles(src, degree) {
        assert_eq!(p.degree(), degree);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(Permutation::parse_cycles(&p.to_string(), degree).unwrap(), p);
    }
});
