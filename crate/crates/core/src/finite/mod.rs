//! Finite groups and their characters.
//!
//! Groups are generated from permutations or from matrices over `Z/m`.
//! Every multiplicity statement (reciprocity, induction in stages, fixed
//! vectors of induced representations) is decided on characters.

pub mod character;
pub mod chardata;
pub mod group;
pub mod matrix;
pub mod perm;
pub mod subgroup;
pub mod suite;

pub use character::{as_multiplicity, frobenius_check, stages_check, Character, Reciprocity, StagesOutcome};
pub use group::{sl_order_formula, ClassPartition, FiniteGroup, GroupElement, DEFAULT_ORDER_CAP};
pub use matrix::{separation_witness, IntMatrix, ModMatrix};
pub use perm::Permutation;
pub use subgroup::Subgroup;
pub use chardata::{load_irreducibles, parse_characters};
pub use suite::{CheckReport, ClassRow, Suite, SuiteErrors, SuiteReport};
