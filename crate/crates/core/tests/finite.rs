//! Finite groups, characters and the reciprocity suite, checked against
//! closed forms and brute-force scans.

use std::sync::Arc;

use homspace::finite::{
    frobenius_check, separation_witness, sl_order_formula, stages_check, Character, FiniteGroup, IntMatrix,
    Subgroup, Suite, DEFAULT_ORDER_CAP,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod common;
use common::{minimal_modulus_by_scan, random_elementary};

#[test]
fn congruence_orders_match_the_formula() {
    for (n, p) in [(2usize, 2u32), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)] {
        let g = FiniteGroup::congruence(n, p, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order() as u64, sl_order_formula(n as u32, p as u64), "SL({n}, {p})");
    }
}

#[test]
fn formula_matches_a_direct_determinant_count() {
    // count all n×n matrices over Z/p with determinant 1
    for (n, p) in [(2usize, 2i64), (2, 3), (2, 5), (3, 2)] {
        let total = p.pow((n * n) as u32);
        let mut count = 0u64;
        for code in 0..total {
            let mut c = code;
            let entries: Vec<i64> = (0..n * n)
                .map(|_| {
                    let e = c % p;
                    c /= p;
                    e
                })
                .collect();
            let det = IntMatrix::new(n, entries).unwrap().determinant().unwrap();
            if det.rem_euclid(p as i128) == 1 {
                count += 1;
            }
        }
        assert_eq!(count, sl_order_formula(n as u32, p as u64), "SL({n}, {p})");
    }
}

#[test]
fn separation_witness_is_the_least_separating_modulus() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut tested = 0;
    while tested < 50 {
        let len = rng.gen_range(1..=10);
        let a = (0..len).fold(IntMatrix::identity(2), |acc, _| {
            acc.checked_mul(&random_elementary(&mut rng)).unwrap()
        });
        if a.is_identity() {
            continue;
        }
        let m = separation_witness(&a).unwrap();
        assert_eq!(m, minimal_modulus_by_scan(&a), "{a}");
        assert!(!a.reduce(m as u32).is_identity());
        tested += 1;
    }
}

#[test]
fn separation_witness_rejects_bad_input() {
    assert!(separation_witness(&IntMatrix::identity(3)).is_err());
    assert!(separation_witness(&IntMatrix::new(2, vec![2, 0, 0, 1]).unwrap()).is_err());
}

fn perm_group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
    let gens = gens
        .iter()
        .map(|s| homspace::finite::Permutation::parse_cycles(s, degree).unwrap())
        .collect();
    Arc::new(FiniteGroup::from_permutations(gens, DEFAULT_ORDER_CAP).unwrap())
}

#[test]
fn multiplication_table_satisfies_the_axioms() {
    let g = perm_group(4, &["(1 2)", "(1 2 3 4)"]);
    let n = g.order();
    for a in 0..n {
        assert_eq!(g.mul(a, g.identity()), a);
        assert_eq!(g.mul(a, g.inverse(a)), g.identity());
        for b in 0..n {
            for c in 0..n {
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            }
        }
    }
}

#[test]
fn class_sizes_sum_to_the_order() {
    let suite = Suite::bundled();
    for name in suite.domain_names() {
        let d = suite.domain(&name).unwrap();
        assert_eq!(d.classes().sizes().iter().sum::<usize>(), d.order(), "{name}");
        // class equation: every size divides the order
        assert!(d.classes().sizes().iter().all(|s| d.order() % s == 0));
    }
}

#[test]
fn suite_characters_satisfy_regular_and_degree_laws() {
    let suite = Suite::bundled();
    for name in suite.domain_names() {
        let d = suite.domain(&name).unwrap();
        let g = Arc::new(Subgroup::whole(d.parent()));
        let reg = Character::regular(d);
        let irreps = suite.irreducibles(&name).unwrap();
        assert_eq!(
            irreps.iter().map(|c| c.degree().re.powi(2)).sum::<f64>().round() as usize,
            d.order()
        );
        for chi in irreps {
            assert!((reg.inner(chi).unwrap() - chi.degree()).norm() < 1e-9);
            let up = chi.induce(&g).unwrap();
            let index = (g.order() / d.order()) as f64;
            assert!((up.degree() - chi.degree() * index).norm() < 1e-9);
        }
    }
}

#[test]
fn frobenius_on_every_suite_pair() {
    let suite = Suite::bundled();
    for (g, h) in [("S3", "S3_C3"), ("S4", "S4_S3"), ("SL23", "SL23_B"), ("GL32", "GL32_P")] {
        for chi in suite.irreducibles(h).unwrap() {
            for rho in suite.irreducibles(g).unwrap() {
                let r = frobenius_check(chi, rho).unwrap();
                assert_eq!(r.mult_up, r.mult_down, "{h} ≤ {g}");
            }
        }
    }
}

#[test]
fn stages_from_the_trivial_group_give_the_regular_character() {
    let suite = Suite::bundled();
    for (g, h, e) in [("S3", "S3_C3", "S3_E"), ("S4", "S4_S3", "S4_E"), ("GL32", "GL32_P", "GL32_E")] {
        let (g, h, e) = (suite.domain(g).unwrap(), suite.domain(h).unwrap(), suite.domain(e).unwrap());
        let one = Character::trivial(e);
        let up = one.induce(h).unwrap().induce(g).unwrap();
        assert_eq!(up.max_difference(&Character::regular(g)).unwrap(), 0.0);
        let out = stages_check(g, h, &one).unwrap();
        assert!(out.holds(1e-9));
    }
}

#[test]
fn stages_for_c2_in_s3_in_s4_have_degree_twelve() {
    let suite = Suite::bundled();
    let (g, h, f) = (
        suite.domain("S4").unwrap(),
        suite.domain("S4_S3").unwrap(),
        suite.domain("S4_C2").unwrap(),
    );
    let one = Character::trivial(f);
    let staged = one.induce(h).unwrap().induce(g).unwrap();
    let direct = one.induce(g).unwrap();
    assert_eq!(staged.degree(), Complex64::new(12.0, 0.0));
    assert!(staged.max_difference(&direct).unwrap() < 1e-9);
}

#[test]
fn corrupted_character_file_is_rejected_with_its_line() {
    let bad = "1 1 1\n1 -1 1\n2 0 -0.9\n";
    let text = "group S3 perm 3 : (1 2) ; (1 2 3)\nirreps S3 s3.chars\n";
    let Err(errs) = Suite::parse(text, &|_| Ok(bad.to_string())) else {
        panic!("corrupted irreducibles accepted");
    };
    let msg = errs.to_string();
    assert!(msg.contains("line 2") && msg.contains("s3.chars:3"), "{msg}");
}
