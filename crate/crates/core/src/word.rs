//! Reduced words in the free group F∞ on generators `x_i`, `i ∈ Z`.
//!
//! Besides the group operations this module decides membership in the
//! normal closures `Γ_n = ⟨⟨x_i : i ≤ n⟩⟩`. The quotient `F∞/Γ_n` is free on
//! the surviving generators `x_i, i > n`, so `Γ_n` is exactly the kernel of
//! the retraction that deletes every letter of index `≤ n`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};

/// A generator `x_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    index: i64,
    exponent: i8,
}

impl Letter {
    /// Returns `None` unless `exponent` is `1` or `-1`.
    pub fn new(index: i64, exponent: i8) -> Option<Letter> {
        matches!(exponent, 1 | -1).then_some(Letter { index, exponent })
    }

    pub fn gen(index: i64) -> Letter {
        Letter { index, exponent: 1 }
    }

    pub fn gen_inv(index: i64) -> Letter {
        Letter { index, exponent: -1 }
    }

    pub fn index(self) -> i64 {
        self.index
    }

    pub fn exponent(self) -> i8 {
        self.exponent
    }

    pub fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            exponent: -self.exponent,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.exponent == -other.exponent
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "x{}", self.index)
        } else {
            write!(f, "x{}^-1", self.index)
        }
    }
}

/// A freely reduced word. The empty word is the identity `e`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn gen(index: i64) -> Word {
        Word(vec![Letter::gen(index)])
    }

    pub fn gen_inv(index: i64) -> Word {
        Word(vec![Letter::gen_inv(index)])
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for letter in raw {
            match stack.last() {
                Some(&top) if top.cancels(letter) => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The shift automorphism `τ_n : x_m ↦ x_{m+n}`, applied letterwise.
    pub fn shift(&self, n: i64) -> Word {
        if n == 0 {
            return self.clone();
        }
        Word(
            self.0
                .iter()
                .map(|l| Letter {
                    index: l.index + n,
                    exponent: l.exponent,
                })
                .collect(),
        )
    }

    /// Image under the retraction killing every `x_i` with `i ≤ level`.
    pub fn retract(&self, level: i64) -> Word {
        Word::reduce(self.0.iter().copied().filter(|l| l.index > level))
    }

    /// Membership in the normal closure `Γ_level`.
    pub fn in_gamma(&self, level: i64) -> bool {
        // A reduced word whose letters all survive is already its own image.
        if self.0.iter().all(|l| l.index > level) {
            return self.0.is_empty();
        }
        self.retract(level).is_identity()
    }

    /// The least `n` with `self ∈ Γ_n`.
    ///
    /// Membership is monotone in `n` and can only change at a letter index,
    /// so a binary search over the distinct indices suffices.
    pub fn minimal_level(&self) -> Result<i64> {
        if self.is_identity() {
            return Err(Error::IdentityHasNoLevel);
        }
        let mut indices: Vec<i64> = self.0.iter().map(|l| l.index).collect();
        indices.sort_unstable();
        indices.dedup();
        let first_member = indices.partition_point(|&n| !self.in_gamma(n));
        Ok(indices[first_member])
    }

    pub fn max_index(&self) -> Option<i64> {
        self.0.iter().map(|l| l.index).max()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.0.iter().map(|l| l.index).min()
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        // Cancel at the seam only; both factors are already reduced.
        let overlap = self
            .0
            .iter()
            .rev()
            .zip(rhs.0.iter())
            .take_while(|(a, b)| a.cancels(**b))
            .count();
        let mut letters = Vec::with_capacity(self.0.len() + rhs.0.len() - 2 * overlap);
        letters.extend_from_slice(&self.0[..self.0.len() - overlap]);
        letters.extend_from_slice(&rhs.0[overlap..]);
        Word(letters)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Word, ParseError> {
        crate::literal::parse_word(s)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = ParseError;

    fn try_from(s: String) -> Result<Word, ParseError> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(Word::reduce([Letter::gen(1), Letter::gen_inv(1)]).is_identity());
        assert!(Word::reduce([]).is_identity());
        let raw = [Letter::gen(2), Letter::gen(5), Letter::gen_inv(5), Letter::gen(2)];
        assert_eq!(Word::reduce(raw), w("x2 x2"));
    }

    #[test]
    fn reduce_is_idempotent_on_nested_cancellation() {
        let raw = [
            Letter::gen(1),
            Letter::gen(2),
            Letter::gen(3),
            Letter::gen_inv(3),
            Letter::gen_inv(2),
            Letter::gen_inv(1),
            Letter::gen(4),
        ];
        let once = Word::reduce(raw);
        assert_eq!(once, w("x4"));
        assert_eq!(Word::reduce(once.letters().iter().copied()), once);
    }

    #[test]
    fn mul_and_inverse() {
        assert!((&w("x0") * &w("x0^-1")).is_identity());
        assert_eq!(w("x1 x2").inverse(), w("x2^-1 x1^-1"));
        assert_eq!(&w("x1 x2") * &w("x2^-1 x3"), w("x1 x3"));
        assert!((&w("x1 x2 x3") * &w("x3^-1 x2^-1 x1^-1")).is_identity());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w("x0 x3^-1").shift(2), w("x2 x5^-1"));
        let u = w("x4 x-2^-1 x4");
        assert_eq!(u.shift(0), u);
        assert_eq!(w("x1").shift(-1), w("x0"));
    }

    #[test]
    fn gamma_membership_examples() {
        assert!(w("x0").in_gamma(0));
        assert!(w("x5 x3 x5^-1").in_gamma(3));
        assert!(!w("x1").in_gamma(0));
        assert!(Word::identity().in_gamma(-100));
    }

    #[test]
    fn minimal_level_examples() {
        assert_eq!(w("x5 x3 x5^-1").minimal_level(), Ok(3));
        assert_eq!(w("x5 x3").minimal_level(), Ok(5));
        assert_eq!(w("x0").minimal_level(), Ok(0));
        assert_eq!(Word::identity().minimal_level(), Err(Error::IdentityHasNoLevel));
    }

    #[test]
    fn minimal_level_of_commutator_is_its_lower_index() {
        // Killing either generator kills [x1, x2].
        assert_eq!(w("x1 x2 x1^-1 x2^-1").minimal_level(), Ok(1));
        assert_eq!(w("x2 x1 x2^-1 x1^-1 x3").minimal_level(), Ok(3));
    }

    #[test]
    fn display_round_trips() {
        for s in ["e", "x3 x-1^-1 x3", "x0"] {
            assert_eq!(w(s).to_string(), s);
        }
    }

    #[test]
    fn letter_rejects_bad_exponent() {
        assert!(Letter::new(0, 2).is_none());
        assert!(Letter::new(0, 0).is_none());
        assert_eq!(Letter::new(3, -1), Some(Letter::gen_inv(3)));
    }
}
