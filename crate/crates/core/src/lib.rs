//! Exact and numerical checks around the coset spaces of `G = Z ⋉ F∞`.
//!
//! * [`word`], [`semidirect`]: the free group `F∞`, the shift automorphism,
//!   the semidirect product, and membership in the normal closures `Γ_n`.
//! * [`coset`], [`ball`]: canonical forms for `G/Γ_0`, the left action and
//!   breadth-first Schreier graph balls.
//! * [`spectral`]: Markov operators, Kesten lower bounds, exact invariance
//!   checks and Reiter vectors.
//! * [`finite`]: character arithmetic on finite groups (induction,
//!   restriction, reciprocity) and congruence quotients `SL(n, Z/m)`.

pub mod ball;
pub mod coset;
pub mod error;
pub mod finite;
pub mod literal;
pub mod semidirect;
pub mod spectral;
pub mod word;

pub use ball::{HOrbitPartition, OrbitBall, DEFAULT_NODE_CAP};
pub use coset::Coset;
pub use error::{Error, ParseError, Result};
pub use semidirect::GElement;
pub use word::{Letter, Word};
