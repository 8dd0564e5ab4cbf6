//! Independent checks: dense eigenvalues, circle maximization, recomposition and
//! seeded state generators.

mod eigen;
mod maximize;
mod random;

pub use eigen::{dense_is_psd, dense_min_eigenvalue, dense_rank, hermitian_eigenvalues};
pub use maximize::{max_on_circle, CircleMax, DEFAULT_GRID};
pub use random::{random_product_vector, random_states, rng_for, ProfileKind, RandomProfile};

use crate::dense::Dense8;
use crate::product::WeightedDecomposition;
use crate::state::XState;

/// `Σ w_k |ξ_k⟩⟨ξ_k|` with each `ξ_k` normalized first.
pub fn recompose(d: &WeightedDecomposition) -> Dense8 {
    let mut m = Dense8::zeros();
    for t in &d.terms {
        let v = t.vector.normalized();
        m = m + Dense8::outer(&v.ket()).scale(t.weight);
    }
    m
}

/// Largest entrywise deviation between the recomposition and the embedded state.
pub fn max_recomposition_error(s: &XState, d: &WeightedDecomposition) -> f64 {
    recompose(d).max_abs_diff(&s.embed())
}

/// Entrywise agreement within `tol · (1 + max|embed(s)|)`, with positive weights.
pub fn verify_decomposition(s: &XState, d: &WeightedDecomposition, tol: f64) -> bool {
    if d.terms.iter().any(|t| t.weight.is_nan() || t.weight <= 0.0 || !t.vector.is_valid()) {
        return false;
    }
    let target = s.embed();
    recompose(d).max_abs_diff(&target) <= tol * (1.0 + target.max_abs())
}
