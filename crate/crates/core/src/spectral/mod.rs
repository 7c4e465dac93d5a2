//! Quantitative amenability tests on the coset spaces.
//!
//! Non-amenability shows up as a Markov operator norm bounded away from 1
//! (Kesten), amenability as explicit almost-invariant unit vectors.

mod genset;
mod invariance;
mod kesten;
mod operator;
mod reiter;

pub use genset::GenSet;
pub use invariance::{delta_deviations_at, delta_invariance_check, DeltaCheck};
pub use kesten::{kesten_profile, KestenOptions, SpectralProfile};
pub use operator::{norm_lower_bound, SparseOperator};
pub use reiter::{reiter_search, ReiterCertificate, ReiterEntry};
