use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semidirect::GElement;
use crate::word::Word;

/// A nonempty finite multiset of elements of `G`, closed under inversion
/// with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSet {
    elements: Vec<GElement>,
}

impl GenSet {
    pub fn new(elements: Vec<GElement>) -> Result<GenSet> {
        if elements.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if !is_symmetric(&elements) {
            return Err(Error::NotSymmetric);
        }
        Ok(GenSet { elements })
    }

    /// `s, s⁻¹` for every `s` given, in that interleaved order.
    pub fn symmetric_closure(elements: &[GElement]) -> Result<GenSet> {
        GenSet::new(elements.iter().flat_map(|s| [s.clone(), s.inverse()]).collect())
    }

    /// `{(0, x_1)^{±1}, …, (0, x_k)^{±1}}`.
    pub fn free(k: usize) -> Result<GenSet> {
        let gens: Vec<GElement> = (1..=k as i64).map(|i| GElement::from_word(Word::gen(i))).collect();
        GenSet::symmetric_closure(&gens)
    }

    pub fn elements(&self) -> &[GElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of the multiset without repetition, in first-seen order.
    pub fn distinct(&self) -> Vec<GElement> {
        let mut seen = std::collections::HashSet::new();
        self.elements.iter().filter(|g| seen.insert(*g)).cloned().collect()
    }
}

pub(crate) fn is_symmetric(elements: &[GElement]) -> bool {
    let mut counts: HashMap<&GElement, i64> = HashMap::new();
    for g in elements {
        *counts.entry(g).or_default() += 1;
    }
    counts.iter().all(|(g, &c)| counts.get(&g.inverse()).copied().unwrap_or(0) == c)
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}
