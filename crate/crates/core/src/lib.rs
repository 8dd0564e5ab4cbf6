//! Separability of three-qubit X-states.
//!
//! [`XState`] holds the diagonal `a`, `b` and anti-diagonal `c` of an X-shaped 8×8
//! matrix. [`criteria::classify`] runs the exact branches (low rank, common anti-diagonal
//! magnitude, diagonal) before the necessary and sufficient inequalities, and attaches a
//! product-state certificate to every separable verdict it can prove.

pub mod cli;
pub mod criteria;
pub mod curve;
pub mod decompose;
pub mod dense;
mod error;
pub mod json;
pub mod oracle;
pub mod product;
pub mod state;

pub use criteria::{classify, CriterionResult, Verdict};
pub use dense::Dense8;
pub use error::{Error, Result};
pub use product::{ProductVector, Term, WeightedDecomposition};
pub use state::{InvariantSummary, SymmetryOp, System, XState, DEFAULT_TOL};
