//! Class functions on finite groups: pairing, restriction, induction and the
//! multiplicity statements built from them.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::subgroup::Subgroup;

/// Tolerance for reading an inner product as an integer.
pub const INTEGRALITY_TOL: f64 = 1e-9;

/// A class function, one value per conjugacy class of its domain (in the
/// domain's class order).
#[derive(Debug, Clone)]
pub struct Character {
    domain: Arc<Subgroup>,
    values: Vec<Complex64>,
}

impl Character {
    pub fn new(domain: &Arc<Subgroup>, values: Vec<Complex64>) -> Result<Character> {
        let classes = domain.classes().len();
        if values.len() != classes {
            return Err(Error::InvalidArgument(format!(
                "{} values given for {classes} conjugacy classes",
                values.len()
            )));
        }
        Ok(Character {
            domain: Arc::clone(domain),
            values,
        })
    }

    pub fn trivial(domain: &Arc<Subgroup>) -> Character {
        Character {
            domain: Arc::clone(domain),
            values: vec![Complex64::new(1.0, 0.0); domain.classes().len()],
        }
    }

    /// `|H|` at the identity, zero elsewhere.
    pub fn regular(domain: &Arc<Subgroup>) -> Character {
        let mut values = vec![Complex64::new(0.0, 0.0); domain.classes().len()];
        values[0] = Complex64::new(domain.order() as f64, 0.0);
        Character {
            domain: Arc::clone(domain),
            values,
        }
    }

    /// Permutation character of `domain` acting on the left cosets of `sub`:
    /// the number of cosets `xF` fixed by each class representative.
    pub fn permutation(domain: &Arc<Subgroup>, sub: &Subgroup) -> Result<Character> {
        let group = domain.parent();
        let reps = sub.transversal_in(domain)?;
        let values = domain
            .classes()
            .reps()
            .iter()
            .map(|&g| {
                // g·xF = xF  ⟺  x⁻¹gx ∈ F
                let fixed = reps
                    .iter()
                    .filter(|&&x| sub.contains(group.mul(group.mul(group.inverse(x), g), x)))
                    .count();
                Complex64::new(fixed as f64, 0.0)
            })
            .collect();
        Character::new(domain, values)
    }

    pub fn domain(&self) -> &Arc<Subgroup> {
        &self.domain
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn degree(&self) -> Complex64 {
        self.values[0]
    }

    /// Value at an element (ambient index), `None` outside the domain.
    pub fn at(&self, x: usize) -> Option<Complex64> {
        self.domain.classes().class_of(x).map(|c| self.values[c])
    }

    fn same_domain(&self, other: &Character) -> bool {
        Arc::ptr_eq(&self.domain, &other.domain) || self.domain.same_as(&other.domain)
    }

    /// `⟨χ, ψ⟩ = (1/|H|) Σ_h χ(h)·conj(ψ(h))`, summed classwise.
    pub fn inner(&self, other: &Character) -> Result<Complex64> {
        if !self.same_domain(other) {
            return Err(Error::GroupMismatch);
        }
        let sizes = self.domain.classes().sizes();
        let sum: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .zip(sizes)
            .map(|((a, b), &k)| a * b.conj() * k as f64)
            .sum();
        Ok(sum / self.domain.order() as f64)
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, sub: &Arc<Subgroup>) -> Result<Character> {
        if !sub.is_subgroup_of(&self.domain) {
            return Err(Error::NotNested("restriction to a non-subgroup".into()));
        }
        let values = sub
            .classes()
            .reps()
            .iter()
            .map(|&h| self.at(h).expect("subgroup elements lie in the domain"))
            .collect();
        Character::new(sub, values)
    }

    /// Induction to an overgroup of the domain:
    /// `χ↑(g) = Σ_{t ∈ T} χ°(t⁻¹gt)` over a left transversal `T`, where `χ°`
    /// vanishes off the domain.
    pub fn induce(&self, overgroup: &Arc<Subgroup>) -> Result<Character> {
        let group = overgroup.parent();
        let transversal = self.domain.transversal_in(overgroup)?;
        let zero = Complex64::new(0.0, 0.0);
        let values = overgroup
            .classes()
            .reps()
            .iter()
            .map(|&g| {
                transversal
                    .iter()
                    .map(|&t| self.at(group.mul(group.mul(group.inverse(t), g), t)).unwrap_or(zero))
                    .sum()
            })
            .collect();
        Character::new(overgroup, values)
    }

    /// Largest classwise distance to another character on the same domain.
    pub fn max_difference(&self, other: &Character) -> Result<f64> {
        if !self.same_domain(other) {
            return Err(Error::GroupMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `⟨χ, 1⟩`: the dimension of the fixed space of a representation with
    /// this character.
    pub fn invariant_dimension(&self) -> Result<u64> {
        let m = as_multiplicity(self.inner(&Character::trivial(&self.domain))?)?;
        u64::try_from(m).map_err(|_| Error::NonIntegral { re: m as f64, im: 0.0 })
    }
}

/// Reads a complex inner product as an integer within [`INTEGRALITY_TOL`].
pub fn as_multiplicity(z: Complex64) -> Result<i64> {
    let r = z.re.round();
    if (z.re - r).abs() > INTEGRALITY_TOL || z.im.abs() > INTEGRALITY_TOL {
        return Err(Error::NonIntegral { re: z.re, im: z.im });
    }
    Ok(r as i64)
}

/// Both sides of reciprocity for `χ` on `H` and `ρ` on `G ⊇ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reciprocity {
    /// `⟨ind_H^G χ, ρ⟩_G`
    pub mult_up: i64,
    /// `⟨χ, res_H ρ⟩_H`
    pub mult_down: i64,
}

impl Reciprocity {
    pub fn holds(&self) -> bool {
        self.mult_up == self.mult_down
    }
}

pub fn frobenius_check(chi: &Character, rho: &Character) -> Result<Reciprocity> {
    let up = chi.induce(rho.domain())?.inner(rho)?;
    let down = chi.inner(&rho.restrict(chi.domain())?)?;
    Ok(Reciprocity {
        mult_up: as_multiplicity(up)?,
        mult_down: as_multiplicity(down)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StagesOutcome {
    /// `max |ind_H^G ind_F^H χ − ind_F^G χ|` over classes of `G`.
    pub stages_difference: f64,
    /// `max |ind_F^H 1 − (permutation character of H on H/F)|`.
    pub quasi_regular_difference: f64,
}

impl StagesOutcome {
    pub fn holds(&self, tol: f64) -> bool {
        self.stages_difference <= tol && self.quasi_regular_difference <= tol
    }
}

/// Compares induction in two steps with induction in one step, and checks
/// that inducing the trivial character of `F` to `H` gives the permutation
/// character of `H` on `H/F`.
pub fn stages_check(g: &Arc<Subgroup>, h: &Arc<Subgroup>, chi_f: &Character) -> Result<StagesOutcome> {
    let f = chi_f.domain();
    if !f.is_subgroup_of(h) || !h.is_subgroup_of(g) {
        return Err(Error::NotNested("expected F ≤ H ≤ G".into()));
    }
    let two_step = chi_f.induce(h)?.induce(g)?;
    let one_step = chi_f.induce(g)?;
    let induced_trivial = Character::trivial(f).induce(h)?;
    let perm = Character::permutation(h, f)?;
    Ok(StagesOutcome {
        stages_difference: two_step.max_difference(&one_step)?,
        quasi_regular_difference: induced_trivial.max_difference(&perm)?,
    })
}
