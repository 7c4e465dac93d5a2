#![no_main]

use homspace::literal::{parse_word, parse_word_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_word(src) {
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        if !w.is_identity() {
            let n = w.minimal_level().unwrap();
            assert!(w.in_gamma(n) && !w.in_gamma(n - 1));
        }
    }
    let _ = parse_word_list(src);
});
