//! Product-state certificates for separable X-states.

mod common;
mod rank4;
mod rank6;

pub use common::{decompose_common_magnitude, decompose_eps_mixture, eps_components};
pub(crate) use common::phase_bound;
pub use rank4::{
    decompose_rank4, decompose_suff4, product_xpart_family, rank4_conditions, rank4_data, Rank4Data,
};
pub use rank6::{
    canonical_ops, check_rank6_separability, decompose_rank5, decompose_rank6, gamma,
    is_extreme_in_sx, length_rank6, optimal_decompose_rank6, split_rank6, Partition, Rank6Check,
    Rank6Condition, Rank6Plan, Rank6Split, PAIRS,
};

use crate::product::{diagonal_terms, WeightedDecomposition};

/// Basis terms for `full − part`, entries at or below `tol · max(1, max full)` dropped.
pub(crate) fn remainder_terms(full: &[f64; 8], part: &[f64; 8], tol: f64) -> WeightedDecomposition {
    let scale = full.iter().copied().fold(1.0, f64::max);
    let rest: [f64; 8] = std::array::from_fn(|i| (full[i] - part[i]).max(0.0));
    diagonal_terms(&rest, tol * scale)
}
