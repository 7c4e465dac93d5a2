//! The semidirect product `G = Z ⋉_τ F∞`, where `Z` acts on `F∞` by the
//! index shift `τ_n(x_m) = x_{m+n}`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::word::Word;

/// An element `(shift, word)` of `Z ⋉ F∞`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GElement {
    pub shift: i64,
    pub word: Word,
}

impl GElement {
    pub fn new(shift: i64, word: Word) -> GElement {
        GElement { shift, word }
    }

    pub fn identity() -> GElement {
        GElement::default()
    }

    /// `(n, e)`; `translation(1)` is the generator `t` of the `Z` factor.
    pub fn translation(n: i64) -> GElement {
        GElement::new(n, Word::identity())
    }

    /// `(0, word)`, an element of the normal subgroup `H = F∞`.
    pub fn from_word(word: Word) -> GElement {
        GElement::new(0, word)
    }

    /// `(n, x)⁻¹ = (−n, τ_{−n}(x⁻¹))`.
    pub fn inverse(&self) -> GElement {
        GElement::new(-self.shift, self.word.inverse().shift(-self.shift))
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.word.is_identity()
    }
}

/// `(m, x)(n, y) = (m + n, x·τ_m(y))`.
impl Mul for &GElement {
    type Output = GElement;

    fn mul(self, rhs: &GElement) -> GElement {
        GElement::new(self.shift + rhs.shift, &self.word * &rhs.word.shift(self.shift))
    }
}

impl Mul for GElement {
    type Output = GElement;

    fn mul(self, rhs: GElement) -> GElement {
        &self * &rhs
    }
}

impl fmt::Display for GElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.shift, self.word)
    }
}

impl FromStr for GElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<GElement, ParseError> {
        crate::literal::parse_element(s)
    }
}
