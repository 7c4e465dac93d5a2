#![no_main]

use std::sync::{Arc, OnceLock};

use homspace::finite::{load_irreducibles, parse_characters, FiniteGroup, Permutation, Subgroup, DEFAULT_ORDER_CAP};
use libfuzzer_sys::fuzz_target;

fn s3() -> &'static Arc<Subgroup> {
    static S3: OnceLock<Arc<Subgroup>> = OnceLock::new();
    S3.get_or_init(|| {
        let gens = ["(1 2)", "(1 2 3)"].iter().map(|s| Permutation::parse_cycles(s, 3).unwrap()).collect();
        let g = Arc::new(FiniteGroup::from_permutations(gens, DEFAULT_ORDER_CAP).unwrap());
        Arc::new(Subgroup::whole(&g))
    })
}

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    if let Ok(chars) = parse_characters(s3(), src) {
        for (_, c) in &chars {
            let _ = c.invariant_dimension();
        }
    }
    if let Ok(irreps) = load_irreducibles(s3(), src) {
        assert_eq!(irreps.len(), 3);
    }
});
