//! Oracles shared by the integration tests. None of them calls the
//! code path it checks.
#![allow(dead_code)]

use std::collections::HashMap;

use homspace::finite::IntMatrix;
use homspace::{Letter, Word};
use nalgebra::DMatrix;
use rand::Rng;

pub type M2 = [[i128; 2]; 2];

fn m2_mul(a: M2, b: M2) -> M2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn m2_pow(a: M2, inv: M2, k: i64) -> M2 {
    let base = if k < 0 { inv } else { a };
    (0..k.unsigned_abs()).fold([[1, 0], [0, 1]], |acc, _| m2_mul(acc, base))
}

/// `x_i ↦ A^i B A^-i` with `A, B` the Sanov pair, which is faithful on
/// free words; letters of index `≤ level` go to the identity.
pub fn sanov_image(letters: &[Letter], level: i64) -> M2 {
    const A: M2 = [[1, 2], [0, 1]];
    const A_INV: M2 = [[1, -2], [0, 1]];
    const B: M2 = [[1, 0], [2, 1]];
    const B_INV: M2 = [[1, 0], [-2, 1]];
    letters.iter().fold([[1, 0], [0, 1]], |acc, l| {
        if l.index() <= level {
            return acc;
        }
        let i = l.index();
        let core = if l.exponent() > 0 { B } else { B_INV };
        let g = m2_mul(m2_mul(m2_pow(A, A_INV, i), core), m2_pow(A, A_INV, -i));
        m2_mul(acc, g)
    })
}

pub fn sanov_member(u: &Word, level: i64) -> bool {
    sanov_image(u.letters(), level) == [[1, 0], [0, 1]]
}

/// Top eigenvalue of the simple random walk on the radius-`r` ball of the
/// `2k`-regular tree, killed at the boundary, built from scratch as reduced
/// words over `k` letters and their inverses.
pub fn dense_tree_eigenvalue(k: usize, r: usize) -> f64 {
    let inverse = |s: usize| s ^ 1;
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(vec![], 0)]);
    let mut words = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..r {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..2 * k {
                if w.last().is_some_and(|&l| l == inverse(s)) {
                    continue;
                }
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                index.insert(v.clone(), words.len());
                words.push(v.clone());
                next.push(v);
            }
        }
        frontier = next;
    }
    let n = words.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (i, w) in words.iter().enumerate() {
        for s in 0..2 * k {
            let mut v = w.clone();
            if v.last().is_some_and(|&l| l == inverse(s)) {
                v.pop();
            } else {
                v.push(s);
            }
            if let Some(&j) = index.get(&v) {
                m[(i, j)] += 1.0 / (2 * k) as f64;
            }
        }
    }
    m.symmetric_eigen().eigenvalues.max()
}

/// Fits `L - c/(r + a)²` through three consecutive radii.
pub fn extrapolate(r0: f64, l: [f64; 3]) -> f64 {
    let ratio = (l[2] - l[1]) / (l[1] - l[0]);
    let model = |a: f64| {
        let f = |r: f64| 1.0 / (r + a).powi(2);
        (f(r0 + 1.0) - f(r0 + 2.0)) / (f(r0) - f(r0 + 1.0))
    };
    let (mut lo, mut hi) = (-r0 + 1e-6, 1e4);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if model(mid) < ratio {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = 0.5 * (lo + hi);
    let f = |r: f64| 1.0 / (r + a).powi(2);
    let c = (l[1] - l[0]) / (f(r0) - f(r0 + 1.0));
    l[2] + c * f(r0 + 2.0)
}

/// Least modulus `m ≥ 2` with `a mod m ≠ I`, by trying them in order.
pub fn minimal_modulus_by_scan(a: &IntMatrix) -> u64 {
    (2u64..)
        .find(|&m| !a.reduce(m as u32).is_identity())
        .expect("a non-identity matrix survives some modulus")
}

/// `I + c·E_12` or `I + c·E_21` with `1 ≤ |c| ≤ 6`.
pub fn random_elementary(rng: &mut impl Rng) -> IntMatrix {
    let c = rng.gen_range(1..=6) * if rng.gen() { 1 } else { -1 };
    if rng.gen() {
        IntMatrix::elementary(2, 0, 1, c)
    } else {
        IntMatrix::elementary(2, 1, 0, c)
    }
}
