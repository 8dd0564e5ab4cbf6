//! Pure product vectors and weighted decompositions into them.

use num_complex::Complex64;

use crate::dense::{Dense8, DIM};
use crate::error::Result;
use crate::state::{SymmetryOp, XState};

pub type Qubit = [Complex64; 2];

/// `|x⟩ ⊗ |y⟩ ⊗ |z⟩` on systems A, B, C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductVector {
    pub x: Qubit,
    pub y: Qubit,
    pub z: Qubit,
}

fn qubit_norm(q: &Qubit) -> f64 {
    (q[0].norm_sqr() + q[1].norm_sqr()).sqrt()
}

impl ProductVector {
    pub fn new(x: Qubit, y: Qubit, z: Qubit) -> Self {
        ProductVector { x, y, z }
    }

    /// Computational basis vector `|ijk⟩` for a basis index `0..8`.
    pub fn basis(index: usize) -> Self {
        let bit = |b: usize| -> Qubit {
            if b == 0 {
                [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
            } else {
                [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
            }
        };
        ProductVector::new(bit((index >> 2) & 1), bit((index >> 1) & 1), bit(index & 1))
    }

    pub fn ket(&self) -> [Complex64; DIM] {
        let mut v = [Complex64::new(0.0, 0.0); DIM];
        for (idx, e) in v.iter_mut().enumerate() {
            *e = self.x[(idx >> 2) & 1] * self.y[(idx >> 1) & 1] * self.z[idx & 1];
        }
        v
    }

    pub fn norm_sqr(&self) -> f64 {
        (qubit_norm(&self.x) * qubit_norm(&self.y) * qubit_norm(&self.z)).powi(2)
    }

    /// True when every factor has a nonzero component.
    pub fn is_valid(&self) -> bool {
        [&self.x, &self.y, &self.z].iter().all(|q| qubit_norm(q) > 0.0)
    }

    /// Each factor scaled to unit norm.
    pub fn normalized(&self) -> Self {
        let n = |q: &Qubit| {
            let s = qubit_norm(q);
            [q[0] / s, q[1] / s]
        };
        ProductVector::new(n(&self.x), n(&self.y), n(&self.z))
    }

    /// Flips the sign of the second component of each factor whose flag is set.
    pub fn sign_flipped(&self, fx: bool, fy: bool, fz: bool) -> Self {
        let f = |q: &Qubit, flip: bool| if flip { [q[0], -q[1]] } else { *q };
        ProductVector::new(f(&self.x, fx), f(&self.y, fy), f(&self.z, fz))
    }

    /// The four vectors `ξ(0..3)` whose pure states average to the X-part of `|ξ⟩⟨ξ|`.
    pub fn xpart_family(&self) -> [ProductVector; 4] {
        [
            self.sign_flipped(false, false, false),
            self.sign_flipped(false, true, true),
            self.sign_flipped(true, false, true),
            self.sign_flipped(true, true, false),
        ]
    }

    /// X-part of `|ξ⟩⟨ξ|`.
    pub fn xpart(&self, tol: f64) -> XState {
        let v = self.ket();
        let mut a = [0.0; 4];
        let mut b = [0.0; 4];
        let mut c = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            a[i] = v[i].norm_sqr();
            b[i] = v[DIM - 1 - i].norm_sqr();
            c[i] = v[i] * v[DIM - 1 - i].conj();
        }
        XState::raw(a, b, c, tol)
    }

    /// Image under a local symmetry (the same unitary the state transformation uses).
    pub fn apply_symmetry(&self, op: SymmetryOp) -> Self {
        let (x, y, z) = (self.x, self.y, self.z);
        match op {
            SymmetryOp::SwapBC => ProductVector::new(x, z, y),
            SymmetryOp::SwapAC => ProductVector::new(z, y, x),
            SymmetryOp::SwapAB => ProductVector::new(y, x, z),
            SymmetryOp::FlipA => ProductVector::new([x[1], x[0]], y, z),
            SymmetryOp::FlipB => ProductVector::new(x, [y[1], y[0]], z),
            SymmetryOp::FlipC => ProductVector::new(x, y, [z[1], z[0]]),
        }
    }

    /// True when `self` and `other` span the same ray.
    pub fn parallel_to(&self, other: &ProductVector, tol: f64) -> bool {
        let (u, v) = (self.ket(), other.ket());
        let inner: Complex64 = u.iter().zip(v.iter()).map(|(p, q)| p.conj() * q).sum();
        let nu = self.norm_sqr().sqrt();
        let nv = other.norm_sqr().sqrt();
        (nu * nv - inner.norm()).abs() <= tol * 1f64.max(nu * nv)
    }
}

/// One weighted pure product state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub weight: f64,
    pub vector: ProductVector,
}

/// `Σ w_k |ξ_k⟩⟨ξ_k|` with unit-norm `ξ_k` and positive weights.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct WeightedDecomposition {
    pub terms: Vec<Term>,
}

impl WeightedDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `weight · |v⟩⟨v|` for an unnormalized `v`; the norm moves into the weight.
    /// Non-positive contributions are dropped.
    pub fn push_unnormalized(&mut self, weight: f64, v: ProductVector) {
        let w = weight * v.norm_sqr();
        if w > 0.0 && v.is_valid() {
            self.terms.push(Term { weight: w, vector: v.normalized() });
        }
    }

    /// Adds a term with an explicit weight; `v` is normalized.
    pub fn push(&mut self, weight: f64, v: ProductVector) {
        if weight > 0.0 && v.is_valid() {
            self.terms.push(Term { weight, vector: v.normalized() });
        }
    }

    pub fn extend_scaled(&mut self, other: &WeightedDecomposition, s: f64) {
        for t in &other.terms {
            self.push(t.weight * s, t.vector);
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = WeightedDecomposition::new();
        out.extend_scaled(self, s);
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_weight(&self) -> f64 {
        self.terms.iter().map(|t| t.weight).sum()
    }

    pub fn map_vectors(&self, f: impl Fn(&ProductVector) -> ProductVector) -> Self {
        WeightedDecomposition {
            terms: self
                .terms
                .iter()
                .map(|t| Term { weight: t.weight, vector: f(&t.vector) })
                .collect(),
        }
    }

    /// Each vector transformed by `ops` in order.
    pub fn apply_symmetries(&self, ops: &[SymmetryOp]) -> Self {
        self.map_vectors(|v| ops.iter().fold(*v, |acc, &op| acc.apply_symmetry(op)))
    }

    /// Dense sum of the terms.
    pub fn recompose(&self) -> Dense8 {
        crate::oracle::recompose(self)
    }
}

/// Diagonal X-state written as computational-basis product states.
///
/// Entries at or below `cutoff` are skipped.
pub fn diagonal_terms(diag: &[f64; DIM], cutoff: f64) -> WeightedDecomposition {
    let mut d = WeightedDecomposition::new();
    for (i, &w) in diag.iter().enumerate() {
        if w > cutoff {
            d.push(w, ProductVector::basis(i));
        }
    }
    d
}

/// Diagonal of an X-state in basis order.
pub fn diagonal_of(a: &[f64; 4], b: &[f64; 4]) -> [f64; DIM] {
    [a[0], a[1], a[2], a[3], b[3], b[2], b[1], b[0]]
}

/// Basis-state certificate for a diagonal X-state.
pub fn decompose_diagonal(s: &XState) -> Result<WeightedDecomposition> {
    if !s.is_diagonal() {
        return Err(crate::Error::PreconditionFail("state is not diagonal"));
    }
    Ok(diagonal_terms(&diagonal_of(&s.a(), &s.b()), 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: f64, b: f64) -> Qubit {
        [Complex64::new(a, 0.0), Complex64::new(b, 0.0)]
    }

    #[test]
    fn ket_ordering() {
        let v = ProductVector::new(q(1.0, 2.0), q(3.0, 5.0), q(7.0, 11.0)).ket();
        assert_eq!(v[0].re, 21.0);
        assert_eq!(v[1].re, 33.0);
        assert_eq!(v[2].re, 35.0);
        assert_eq!(v[4].re, 42.0);
        assert_eq!(v[7].re, 110.0);
    }

    #[test]
    fn basis_vectors() {
        for i in 0..DIM {
            let k = ProductVector::basis(i).ket();
            for (j, e) in k.iter().enumerate() {
                assert_eq!(e.re, if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn all_ones_xpart() {
        let s = ProductVector::new(q(1.0, 1.0), q(1.0, 1.0), q(1.0, 1.0)).xpart(1e-9);
        assert_eq!(s.a(), [1.0; 4]);
        assert_eq!(s.b(), [1.0; 4]);
        assert!(s.c().iter().all(|z| *z == Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn zero_entry_gives_diagonal_xpart() {
        let s = ProductVector::new(q(1.0, 0.0), q(0.3, 0.7), q(1.0, -2.0)).xpart(1e-9);
        assert!(s.is_diagonal());
    }

    #[test]
    fn symmetry_action_matches_dense() {
        let v = ProductVector::new(
            [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.9)],
            [Complex64::new(1.0, 0.0), Complex64::new(0.5, -0.5)],
            [Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.3)],
        );
        for op in SymmetryOp::ALL {
            let lhs = Dense8::outer(&v.apply_symmetry(op).ket());
            let rhs = Dense8::outer(&v.ket()).apply_symmetry(op);
            assert!(lhs.max_abs_diff(&rhs) < 1e-14, "{op:?}");
        }
    }

    #[test]
    fn normalization_moves_into_weight() {
        let mut d = WeightedDecomposition::new();
        d.push_unnormalized(0.5, ProductVector::new(q(2.0, 0.0), q(1.0, 0.0), q(1.0, 0.0)));
        assert_eq!(d.len(), 1);
        assert!((d.terms[0].weight - 2.0).abs() < 1e-15);
        assert!((d.terms[0].vector.norm_sqr() - 1.0).abs() < 1e-15);
        d.push(0.0, ProductVector::basis(0));
        d.push(-1.0, ProductVector::basis(0));
        assert_eq!(d.len(), 1);
    }
}
