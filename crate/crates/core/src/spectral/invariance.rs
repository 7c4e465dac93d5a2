use serde::{Deserialize, Serialize};

use crate::coset::Coset;
use crate::semidirect::GElement;
use crate::word::Word;

/// Outcome of testing `δ_{(n,e)F}` against a finite subset of `F∞`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaCheck {
    pub level: i64,
    /// `(s, ‖λ((0,s))δ − δ‖)` in input order.
    pub deviations: Vec<(Word, f64)>,
}

impl DeltaCheck {
    pub fn all_invariant(&self) -> bool {
        self.deviations.iter().all(|(_, d)| *d == 0.0)
    }

    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().map(|(_, d)| *d).fold(0.0, f64::max)
    }
}

/// Deviations of `δ_{(level,e)F}` under each `(0, s)`.
///
/// Images of a basis vector are basis vectors, so each deviation is exactly
/// `0` or `√2`, decided by comparing canonical cosets.
pub fn delta_deviations_at(words: &[Word], level: i64) -> DeltaCheck {
    let base = Coset::base(level);
    let deviations = words
        .iter()
        .map(|s| {
            let moved = base.act(&GElement::from_word(s.clone())) != base;
            (s.clone(), if moved { std::f64::consts::SQRT_2 } else { 0.0 })
        })
        .collect();
    DeltaCheck { level, deviations }
}

/// Picks the least level above which every word of `words` lies in `Γ_level`
/// and checks `δ_{(level,e)F}` there.
///
/// Identity words impose no constraint; a set made only of identities is
/// checked at level 0.
pub fn delta_invariance_check(words: &[Word]) -> DeltaCheck {
    let level = words
        .iter()
        .filter_map(|s| s.minimal_level().ok())
        .max()
        .unwrap_or(0);
    delta_deviations_at(words, level)
}
