//! Skew immaculate noncommutative symmetric functions.
//!
//! The crate expands skew immaculate functions in the complete homogeneous
//! basis of NSym, decides whether a composition pair gives a zero expansion,
//! an expansion with a surviving term before cancellation, or a provably
//! nonzero one, and cross-checks the commutative shadow of all of this
//! against Schur polynomials computed from tableaux.

pub mod census;
pub mod commands;
pub mod compositions;
pub mod error;
pub mod hword;
pub mod ndet;
pub mod par;
pub mod predicates;
pub mod skew_matrix;
pub mod sym_bridge;

pub use compositions::{enumerate_compositions, Composition, HatSequence, WeakComposition};
pub use error::{Error, Result};
pub use hword::{HExpansion, HWord, Sign};
pub use ndet::{immaculate, ndet_laplace, ndet_permutation_sum, skew_immaculate, SignedSelection};
pub use par::Execution;
pub use skew_matrix::{build_matrix, SignPattern, SubscriptMatrix};
