#![no_main]

use homspace::literal::parse_element_list;
use homspace::spectral::GenSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(elems) = parse_element_list(src) {
        assert!(!elems.is_empty());
        GenSet::symmetric_closure(&elems).unwrap();
    }
});
