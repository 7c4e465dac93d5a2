//! Points of the coset space `G/F`, `F = Γ_0`, and the left `G`-action.
//!
//! The left coset `(n, x)F` equals `{n} × xΓ_n`. Since `F∞/Γ_n` is free on
//! `x_i, i > n`, every such coset has exactly one representative `(n, t)`
//! whose tail `t` only uses indices above `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semidirect::GElement;
use crate::word::Word;

/// Canonical form `(level, tail)` of a left `F`-coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coset {
    level: i64,
    tail: Word,
}

impl Coset {
    /// Fails unless every letter of `tail` has index above `level`.
    pub fn new(level: i64, tail: Word) -> Result<Coset> {
        if let Some(low) = tail.min_index() {
            if low <= level {
                return Err(Error::InvalidArgument(format!(
                    "tail {tail} uses index {low}, not above level {level}"
                )));
            }
        }
        Ok(Coset { level, tail })
    }

    /// The coset `(level, e)F = {level} × Γ_level`.
    pub fn base(level: i64) -> Coset {
        Coset {
            level,
            tail: Word::identity(),
        }
    }

    /// Normal form of the coset `aF`.
    pub fn of(a: &GElement) -> Coset {
        Coset {
            level: a.shift,
            tail: a.word.retract(a.shift),
        }
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn tail(&self) -> &Word {
        &self.tail
    }

    pub fn representative(&self) -> GElement {
        GElement::new(self.level, self.tail.clone())
    }

    /// `g · (self)`: the coset `g·rep·F`.
    pub fn act(&self, g: &GElement) -> Coset {
        let level = g.shift + self.level;
        let word = &g.word * &self.tail.shift(g.shift);
        Coset {
            level,
            tail: word.retract(level),
        }
    }
}

impl From<&GElement> for Coset {
    fn from(a: &GElement) -> Coset {
        Coset::of(a)
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.level, self.tail)
    }
}
