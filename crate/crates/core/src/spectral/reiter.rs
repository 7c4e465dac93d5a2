use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::ball::DEFAULT_NODE_CAP;
use crate::coset::Coset;
use crate::error::{Error, Result};
use crate::semidirect::GElement;

use super::genset::GenSet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReiterEntry {
    pub coset: Coset,
    pub amplitude: f64,
}

/// A unit vector `ξ ∈ ℓ²(G/F)` with `‖λ(s)ξ − ξ‖ ≤ ε` for every generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReiterCertificate {
    pub epsilon: f64,
    /// Support is `{(n, e)F : window_start ≤ n < window_start + window}`.
    pub window_start: i64,
    pub window: usize,
    pub vector: Vec<ReiterEntry>,
    pub norm: f64,
    pub deviations: Vec<(GElement, f64)>,
}

impl ReiterCertificate {
    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().map(|(_, d)| *d).fold(0.0, f64::max)
    }

    pub fn holds(&self) -> bool {
        self.max_deviation() <= self.epsilon && (self.norm - 1.0).abs() <= 1e-12
    }

    /// Recomputes every `‖λ(s)ξ − ξ‖` by pushing the stored vector through
    /// the coset action, and returns the largest discrepancy with the stored
    /// deviations.
    pub fn recheck(&self) -> f64 {
        let xi: HashMap<&Coset, f64> = self.vector.iter().map(|e| (&e.coset, e.amplitude)).collect();
        self.deviations
            .iter()
            .map(|(s, stored)| {
                let moved: HashMap<Coset, f64> = self
                    .vector
                    .iter()
                    .map(|e| (e.coset.act(s), e.amplitude))
                    .collect();
                let mut sq = 0.0;
                for (c, a) in &moved {
                    let d = a - xi.get(c).copied().unwrap_or(0.0);
                    sq += d * d;
                }
                for (c, a) in &xi {
                    if !moved.contains_key(*c) {
                        sq += a * a;
                    }
                }
                (sq.sqrt() - stored).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Level above which every `F∞`-part of the generators acts trivially on
/// `(n, e)F` when the generator has no shift.
fn start_level(gens: &GenSet) -> i64 {
    gens.elements()
        .iter()
        .filter_map(|g| g.word.minimal_level().ok())
        .max()
        .unwrap_or(0)
}

/// Number of window cosets each distinct generator carries out of the window.
fn escapes(gens: &[GElement], start: i64, len: usize) -> Vec<usize> {
    let end = start + len as i64;
    let inside = |c: &Coset| c.tail().is_identity() && (start..end).contains(&c.level());
    gens.iter()
        .map(|s| {
            (start..end)
                .filter(|&n| !inside(&Coset::base(n).act(s)))
                .count()
        })
        .collect()
}

fn deviation(escaped: usize, len: usize) -> f64 {
    // |W Δ sW| = 2·|sW \ W| cosets, each of squared amplitude 1/len.
    ((2 * escaped) as f64 / len as f64).sqrt()
}

/// Searches for a uniform vector on a window of `Z`-translates of `(n, e)F`
/// above the level where the free parts of the generators act trivially.
///
/// The window length doubles until every deviation is at most `epsilon`,
/// then bisects back to the shortest passing length in the last bracket.
pub fn reiter_search(gens: &GenSet, epsilon: f64, cap: usize) -> Result<ReiterCertificate> {
    if !(epsilon > 0.0 && epsilon < 2.0) {
        return Err(Error::InvalidArgument(format!("epsilon {epsilon} outside (0, 2)")));
    }
    let cap = if cap == 0 { DEFAULT_NODE_CAP } else { cap };
    let distinct = gens.distinct();
    let start = start_level(gens) + 1;
    let passes = |len: usize| {
        escapes(&distinct, start, len)
            .into_iter()
            .all(|e| deviation(e, len) <= epsilon)
    };

    let mut hi = 1usize;
    while !passes(hi) {
        if hi * 2 > cap {
            return Err(Error::Resource {
                what: "Reiter window",
                count: hi * 2,
                cap,
                radius: None,
            });
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if passes(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let len = hi;
    let amplitude = 1.0 / (len as f64).sqrt();
    let vector: Vec<ReiterEntry> = (start..start + len as i64)
        .map(|n| ReiterEntry {
            coset: Coset::base(n),
            amplitude,
        })
        .collect();
    let norm = vector.iter().map(|e| e.amplitude * e.amplitude).sum::<f64>().sqrt();
    let deviations = distinct
        .iter()
        .cloned()
        .zip(escapes(&distinct, start, len))
        .map(|(s, e)| (s, deviation(e, len)))
        .collect();
    Ok(ReiterCertificate {
        epsilon,
        window_start: start,
        window: len,
        vector,
        norm,
        deviations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn gens(src: &str) -> GenSet {
        GenSet::symmetric_closure(&crate::literal::parse_element_list(src).unwrap()).unwrap()
    }

    #[test]
    fn translation_only() {
        let cert = reiter_search(&gens("t"), 0.2, 0).unwrap();
        assert_eq!(cert.window, 50);
        assert_eq!(cert.max_deviation(), 0.2);
        assert!(cert.holds());
        assert!(cert.recheck() < 1e-12);
    }

    #[test]
    fn free_generator_below_window_needs_one_coset() {
        let cert = reiter_search(&gens("x0"), 0.5, 0).unwrap();
        assert_eq!(cert.window, 1);
        assert_eq!(cert.max_deviation(), 0.0);
        assert_eq!(cert.window_start, 1);
    }

    #[test]
    fn mixed_generators() {
        let cert = reiter_search(&gens("t, x0, x-3"), 0.1, 0).unwrap();
        assert_eq!(cert.window, 200);
        assert!(cert.max_deviation() <= 0.1);
        assert!(cert.recheck() < 1e-12);
        let x0 = GElement::from_word(Word::gen(0));
        assert!(cert.deviations.iter().any(|(s, d)| *s == x0 && *d == 0.0));
    }

    #[test]
    fn epsilon_range_and_cap() {
        assert!(reiter_search(&gens("t"), 0.0, 0).is_err());
        assert!(reiter_search(&gens("t"), 2.0, 0).is_err());
        assert!(matches!(
            reiter_search(&gens("t"), 0.01, 1000),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn recheck_detects_tampering() {
        let mut cert = reiter_search(&gens("t"), 0.3, 0).unwrap();
        cert.deviations[0].1 += 0.01;
        assert!(cert.recheck() > 0.009);
    }
}
