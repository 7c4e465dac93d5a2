#![no_main]

use homspace::literal::parse_element;
use homspace::Coset;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_element(src) {
        assert_eq!(parse_element(&g.to_string()).unwrap(), g);
        assert!((&g * &g.inverse()).is_identity());
        let c = Coset::of(&g);
        assert_eq!(Coset::of(&c.representative()), c);
    }
});
