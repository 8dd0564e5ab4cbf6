//! X-shaped three-qubit Hermitian matrices `X(a, b, c)`.
//!
//! The 8×8 embedding places `a₁..a₄` on the first four diagonal slots, `b₄..b₁` on the
//! last four (so `b₁` sits at the bottom-right corner), and `c₁..c₄` on the upper
//! anti-diagonal with their conjugates mirrored below.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;

use crate::dense::{Dense8, DIM};
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

/// `x ≥ y` up to `tol`, scaled by the magnitudes compared.
pub(crate) fn approx_ge(x: f64, y: f64, tol: f64) -> bool {
    x >= y - tol * 1f64.max(x.abs()).max(y.abs())
}

pub(crate) fn approx_eq(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * 1f64.max(x.abs()).max(y.abs())
}

/// One of the three tensor factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum System {
    A,
    B,
    C,
}

impl System {
    pub const ALL: [System; 3] = [System::A, System::B, System::C];

    /// Bit of the basis index carried by this factor.
    pub fn bit(self) -> usize {
        match self {
            System::A => 4,
            System::B => 2,
            System::C => 1,
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            System::A => "A",
            System::B => "B",
            System::C => "C",
        };
        f.write_str(s)
    }
}

/// Local operations that map X-states to X-states: subsystem swaps and bit flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymmetryOp {
    SwapBC,
    SwapAC,
    SwapAB,
    FlipA,
    FlipB,
    FlipC,
}

impl SymmetryOp {
    pub const ALL: [SymmetryOp; 6] = [
        SymmetryOp::SwapBC,
        SymmetryOp::SwapAC,
        SymmetryOp::SwapAB,
        SymmetryOp::FlipA,
        SymmetryOp::FlipB,
        SymmetryOp::FlipC,
    ];

    /// Image of each basis index under the permutation unitary.
    pub fn permutation(self) -> [usize; DIM] {
        let mut perm = [0usize; DIM];
        for (idx, slot) in perm.iter_mut().enumerate() {
            let (i, j, k) = ((idx >> 2) & 1, (idx >> 1) & 1, idx & 1);
            let (ni, nj, nk) = match self {
                SymmetryOp::SwapBC => (i, k, j),
                SymmetryOp::SwapAC => (k, j, i),
                SymmetryOp::SwapAB => (j, i, k),
                SymmetryOp::FlipA => (1 - i, j, k),
                SymmetryOp::FlipB => (i, 1 - j, k),
                SymmetryOp::FlipC => (i, j, 1 - k),
            };
            *slot = (ni << 2) | (nj << 1) | nk;
        }
        perm
    }
}

/// Three-qubit X-shaped Hermitian matrix.
///
/// Diagonal entries are nonnegative; trace normalization is not imposed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    a: [f64; 4],
    b: [f64; 4],
    c: [Complex64; 4],
    tol: f64,
}

impl XState {
    /// Validating constructor. Diagonal values in `[-tol, 0)` are clamped to zero.
    pub fn new(a: [f64; 4], b: [f64; 4], c: [Complex64; 4], tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        if a.iter().chain(b.iter()).any(|v| !v.is_finite())
            || c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let mut a = a;
        let mut b = b;
        for (i, v) in a.iter_mut().enumerate() {
            if *v < -tol {
                return Err(Error::NegativeDiagonal(i + 1));
            }
            *v = v.max(0.0);
        }
        for (i, v) in b.iter_mut().enumerate() {
            if *v < -tol {
                return Err(Error::NegativeDiagonal(i + 5));
            }
            *v = v.max(0.0);
        }
        Ok(XState { a, b, c, tol })
    }

    /// Constructor with the default tolerance.
    pub fn from_parts(a: [f64; 4], b: [f64; 4], c: [Complex64; 4]) -> Result<Self> {
        Self::new(a, b, c, DEFAULT_TOL)
    }

    /// Real anti-diagonal shorthand, mostly for examples and tests.
    pub fn real(a: [f64; 4], b: [f64; 4], c: [f64; 4]) -> Result<Self> {
        Self::from_parts(a, b, c.map(|x| Complex64::new(x, 0.0)))
    }

    /// Internal constructor for values already known to be valid; clamps rounding noise.
    pub(crate) fn raw(a: [f64; 4], b: [f64; 4], c: [Complex64; 4], tol: f64) -> Self {
        XState {
            a: a.map(|v| v.max(0.0)),
            b: b.map(|v| v.max(0.0)),
            c,
            tol,
        }
    }

    pub fn a(&self) -> [f64; 4] {
        self.a
    }
    pub fn b(&self) -> [f64; 4] {
        self.b
    }
    pub fn c(&self) -> [Complex64; 4] {
        self.c
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn scaled(&self, s: f64) -> Self {
        XState::raw(self.a.map(|v| v * s), self.b.map(|v| v * s), self.c.map(|z| z * s), self.tol)
    }

    pub fn with_c(&self, c: [Complex64; 4]) -> Self {
        XState { c, ..*self }
    }

    /// Largest entry modulus, used as a scale for tolerances.
    pub fn scale(&self) -> f64 {
        self.a
            .iter()
            .chain(self.b.iter())
            .copied()
            .chain(self.c.iter().map(|z| z.norm()))
            .fold(0.0, f64::max)
    }

    pub fn embed(&self) -> Dense8 {
        let mut m = Dense8::zeros();
        for i in 0..4 {
            m.0[i][i] = Complex64::new(self.a[i], 0.0);
            m.0[DIM - 1 - i][DIM - 1 - i] = Complex64::new(self.b[i], 0.0);
            m.0[i][DIM - 1 - i] = self.c[i];
            m.0[DIM - 1 - i][i] = self.c[i].conj();
        }
        m
    }

    /// X-part of a Hermitian 8×8 matrix.
    pub fn xpart(m: &Dense8, tol: f64) -> Result<Self> {
        let defect = m.hermitian_defect();
        if defect > tol * 1f64.max(m.max_abs()) {
            return Err(Error::NotHermitian(defect));
        }
        let mut a = [0.0; 4];
        let mut b = [0.0; 4];
        let mut c = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            a[i] = m.0[i][i].re;
            b[i] = m.0[DIM - 1 - i][DIM - 1 - i].re;
            // average the mirrored pair so small asymmetries do not bias c
            c[i] = (m.0[i][DIM - 1 - i] + m.0[DIM - 1 - i][i].conj()) * 0.5;
        }
        XState::new(a, b, c, tol)
    }

    pub fn partial_transpose(&self, sys: System) -> Self {
        let [c1, c2, c3, c4] = self.c;
        let c = match sys {
            System::A => [c4.conj(), c3.conj(), c2.conj(), c1.conj()],
            System::B => [c3, c4, c1, c2],
            System::C => [c2, c1, c4, c3],
        };
        self.with_c(c)
    }

    fn block_scale(&self, i: usize) -> f64 {
        1f64.max(self.a[i] * self.b[i]).max(self.c[i].norm_sqr())
    }

    /// 2×2 block positivity: `a_i b_i ≥ |c_i|²` for every block.
    pub fn is_positive(&self) -> bool {
        (0..4).all(|i| {
            self.a[i] * self.b[i] >= self.c[i].norm_sqr() - self.tol * self.block_scale(i)
        })
    }

    /// Positivity of all three partial transposes, `min √(a_i b_i) ≥ R`.
    pub fn is_ppt(&self) -> Result<bool> {
        if !self.is_positive() {
            return Err(Error::NotAState);
        }
        let min_geo = (0..4)
            .map(|i| (self.a[i] * self.b[i]).sqrt())
            .fold(f64::INFINITY, f64::min);
        Ok(approx_ge(min_geo, self.big_r(), self.tol))
    }

    /// Ranks of the four 2×2 blocks.
    pub fn block_ranks(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for (i, r) in out.iter_mut().enumerate() {
            let (a, b, c) = (self.a[i], self.b[i], self.c[i].norm());
            *r = if a <= self.tol && b <= self.tol && c <= self.tol {
                0
            } else if (a * b - c * c).abs() <= self.tol * self.block_scale(i) {
                1
            } else {
                2
            };
        }
        out
    }

    fn block_rank_sum(&self) -> usize {
        self.block_ranks().iter().sum()
    }

    pub fn rank(&self) -> Result<usize> {
        if !self.is_positive() {
            return Err(Error::NotAState);
        }
        Ok(self.block_rank_sum())
    }

    /// Ranks of the partial transposes over A, B, C.
    pub fn pt_ranks(&self) -> [usize; 3] {
        System::ALL.map(|s| self.partial_transpose(s).block_rank_sum())
    }

    /// `Δ`: minimum of the four block geometric means and the two fourth roots.
    pub fn delta(&self) -> f64 {
        let [a1, a2, a3, a4] = self.a;
        let [b1, b2, b3, b4] = self.b;
        [
            (a1 * b1).sqrt(),
            (a2 * b2).sqrt(),
            (a3 * b3).sqrt(),
            (a4 * b4).sqrt(),
            (a1 * b2 * b3 * a4).sqrt().sqrt(),
            (b1 * a2 * a3 * b4).sqrt().sqrt(),
        ]
        .into_iter()
        .fold(f64::INFINITY, f64::min)
    }

    /// `R`: largest anti-diagonal modulus.
    pub fn big_r(&self) -> f64 {
        self.c.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `r`: smallest anti-diagonal modulus.
    pub fn small_r(&self) -> f64 {
        self.c.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min)
    }

    pub fn is_diagonal(&self) -> bool {
        self.c.iter().all(|z| z.norm() <= self.tol)
    }

    /// True when `R - r` is within tolerance.
    pub fn has_common_magnitude(&self) -> bool {
        approx_eq(self.big_r(), self.small_r(), self.tol)
    }

    /// `c₁c₄·conj(c₂c₃)`; its argument is the phase difference.
    pub(crate) fn phase_product(&self) -> Complex64 {
        let [c1, c2, c3, c4] = self.c;
        c1 * c4 * (c2 * c3).conj()
    }

    /// `φ = (θ₁+θ₄) − (θ₂+θ₃) mod 2π`, absent when some `|c_i| ≤ tol`.
    pub fn phase_difference(&self) -> Option<f64> {
        if self.c.iter().any(|z| z.norm() <= self.tol) {
            return None;
        }
        let mut phi = self.phase_product().arg();
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi -= TAU;
        }
        Some(phi)
    }

    /// `|sin(φ/2)|`, or `None` when the phase is undefined.
    pub fn sin_half_phase(&self) -> Option<f64> {
        self.phase_difference().map(|phi| (phi / 2.0).sin().abs())
    }

    pub fn phase_identity_holds(&self) -> Result<bool> {
        if let Some(i) = self.c.iter().position(|z| z.norm() <= self.tol) {
            return Err(Error::PhaseUndefined(i + 1));
        }
        let w = self.phase_product();
        let m = w.norm();
        Ok(w.re > 0.0 && w.im.abs() <= self.tol * m.max(m.sqrt()))
    }

    pub fn invariants(&self) -> InvariantSummary {
        let thetas = self.c.map(|z| (z.norm() > self.tol).then(|| z.arg()));
        let rank = self.block_rank_sum();
        let pt_ranks = self.pt_ranks();
        InvariantSummary {
            delta: self.delta(),
            big_r: self.big_r(),
            small_r: self.small_r(),
            phi: self.phase_difference(),
            thetas,
            rank,
            pt_ranks,
            p_score: rank + pt_ranks.iter().sum::<usize>(),
        }
    }

    /// Conjugation by a local permutation unitary, re-extracted as an X-state.
    pub fn local_symmetry(&self, op: SymmetryOp) -> Self {
        let m = self.embed().apply_symmetry(op);
        debug_assert!(m.is_x_shaped(0.0));
        XState::xpart(&m, self.tol).expect("permutation conjugate of an X-state is Hermitian")
    }

    /// Applies a sequence of symmetry operations in order.
    pub fn apply_ops(&self, ops: &[SymmetryOp]) -> Self {
        ops.iter().fold(*self, |s, &op| s.local_symmetry(op))
    }
}

/// Scalar invariants of an X-state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub delta: f64,
    pub big_r: f64,
    pub small_r: f64,
    pub phi: Option<f64>,
    pub thetas: [Option<f64>; 4],
    pub rank: usize,
    pub pt_ranks: [usize; 3],
    pub p_score: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const ONES: [f64; 4] = [1.0; 4];

    #[test]
    fn constructor_examples() {
        assert!(XState::real(ONES, ONES, ONES).is_ok());
        assert!(XState::real([1.0, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0], [0.5, 0.0, 0.0, 0.0]).is_ok());
        assert_eq!(
            XState::real([-1.0, 1.0, 1.0, 1.0], ONES, [0.0; 4]),
            Err(Error::NegativeDiagonal(1))
        );
        assert_eq!(
            XState::real(ONES, [1.0, 1.0, -0.5, 1.0], [0.0; 4]),
            Err(Error::NegativeDiagonal(7))
        );
        let s = XState::real([-1e-12, 1.0, 1.0, 1.0], ONES, [0.0; 4]).unwrap();
        assert_eq!(s.a()[0], 0.0);
        assert!(XState::new(ONES, ONES, [c(0.0, 0.0); 4], 0.0).is_err());
    }

    #[test]
    fn embed_layout() {
        let id = XState::real(ONES, ONES, [0.0; 4]).unwrap().embed();
        assert_eq!(id, Dense8::identity());
        let s = XState::from_parts(ONES, ONES, [c(0.3, 0.4), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        let m = s.embed();
        assert_eq!(m[(0, 7)], c(0.3, 0.4));
        assert_eq!(m[(7, 0)], c(0.3, -0.4));
        let s = XState::real([1.0, 2.0, 3.0, 4.0], [5.0, 6.0, 7.0, 8.0], [0.0; 4]).unwrap();
        let m = s.embed();
        assert_eq!(m[(4, 4)].re, 8.0);
        assert_eq!(m[(7, 7)].re, 5.0);
    }

    #[test]
    fn xpart_rejects_non_hermitian() {
        let mut m = Dense8::identity();
        m[(0, 1)] = c(1.0, 0.0);
        assert!(matches!(XState::xpart(&m, 1e-9), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn xpart_of_maximally_mixed() {
        let s = XState::xpart(&Dense8::identity().scale(0.125), 1e-9).unwrap();
        assert_eq!(s.a(), [0.125; 4]);
        assert_eq!(s.b(), [0.125; 4]);
        assert!(s.is_diagonal());
    }

    #[test]
    fn partial_transpose_examples() {
        let s = XState::real(ONES, ONES, [1.0, 2.0, 3.0, 4.0]).unwrap();
        let re = |s: XState| s.c().map(|z| z.re);
        assert_eq!(re(s.partial_transpose(System::B)), [3.0, 4.0, 1.0, 2.0]);
        assert_eq!(re(s.partial_transpose(System::A)), [4.0, 3.0, 2.0, 1.0]);
        assert_eq!(re(s.partial_transpose(System::C)), [2.0, 1.0, 4.0, 3.0]);
    }

    #[test]
    fn partial_transpose_matches_dense() {
        let s = XState::from_parts(
            [1.0, 2.0, 3.0, 4.0],
            [0.5, 1.5, 2.5, 3.5],
            [c(0.1, 0.2), c(-0.3, 0.4), c(0.5, -0.6), c(0.7, 0.8)],
        )
        .unwrap();
        for sys in System::ALL {
            let dense = s.embed().partial_transpose(sys);
            assert!(dense.max_abs_diff(&s.partial_transpose(sys).embed()) < 1e-15, "{sys}");
        }
    }

    #[test]
    fn positivity_examples() {
        assert!(XState::real(ONES, ONES, ONES).unwrap().is_positive());
        assert!(!XState::real(ONES, ONES, [1.1, 1.0, 1.0, 1.0]).unwrap().is_positive());
    }

    #[test]
    fn ppt_requires_state() {
        let s = XState::real(ONES, ONES, [1.1, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(s.is_ppt(), Err(Error::NotAState));
    }

    #[test]
    fn example_one_ppt_boundary() {
        let ex = |r: f64, th: f64| {
            XState::from_parts(ONES, ONES, [c(r, 0.0), c(r, 0.0), Complex64::from_polar(r, th), c(r, 0.0)])
                .unwrap()
        };
        assert!(ex(1.0, 0.7).is_ppt().unwrap());
        assert!(ex(0.5, 2.0).is_ppt().unwrap());
        // r > 1 is not even positive
        assert!(!ex(1.01, 0.7).is_positive());
        // a PPT failure on a positive state
        let s = XState::real([1.0, 1.0, 1.0, 0.25], ONES, [0.9, 0.0, 0.0, 0.0]).unwrap();
        assert!(s.is_positive());
        assert!(!s.is_ppt().unwrap());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(XState::real(ONES, ONES, ONES).unwrap().rank(), Ok(4));
        assert_eq!(XState::real(ONES, ONES, [1.0, 1.0, 0.5, 0.5]).unwrap().rank(), Ok(6));
        assert_eq!(XState::real(ONES, ONES, [0.0; 4]).unwrap().rank(), Ok(8));
        assert_eq!(XState::real([1.0, 0.0, 0.0, 0.0], [0.0; 4], [0.0; 4]).unwrap().rank(), Ok(1));
        assert_eq!(XState::real(ONES, ONES, [2.0, 0.0, 0.0, 0.0]).unwrap().rank(), Err(Error::NotAState));
    }

    #[test]
    fn delta_example() {
        let s = XState::real([1.0, 2.0, 3.0, 4.0], [4.0, 3.0, 2.0, 1.0], [0.0; 4]).unwrap();
        // radicals: 2, √6, √6, 2, ⁴√24, ⁴√24
        assert!((s.delta() - 2.0).abs() < 1e-15);
        let inv = s.invariants();
        assert_eq!(inv.phi, None);
        assert_eq!(inv.small_r, 0.0);
    }

    #[test]
    fn phase_difference_example_one() {
        let r = 0.6;
        for th in [0.3, 1.0, 2.5, 4.0, 6.0] {
            let s = XState::from_parts(ONES, ONES, [c(r, 0.0), c(r, 0.0), Complex64::from_polar(r, th), c(r, 0.0)])
                .unwrap();
            let inv = s.invariants();
            let expected = (TAU - th).rem_euclid(TAU);
            assert!((inv.phi.unwrap() - expected).abs() < 1e-12, "θ={th}");
            assert!((inv.big_r - r).abs() < 1e-15 && (inv.small_r - r).abs() < 1e-15);
        }
        let s = XState::real(ONES, ONES, [1.0, 1.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.phase_difference(), None);
        assert_eq!(s.small_r(), 0.0);
    }

    #[test]
    fn phase_identity_examples() {
        let s = XState::real(ONES, ONES, ONES).unwrap();
        assert_eq!(s.phase_identity_holds(), Ok(true));
        let s = XState::from_parts(ONES, ONES, [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(s.phase_identity_holds(), Ok(true));
        let s = XState::from_parts(
            ONES,
            ONES,
            [c(1.0, 0.0), c(1.0 / 3.0, 0.0), c(0.0, 1.0 / 3.0), c(2.0 / 3.0, -1.0 / 3.0)],
        )
        .unwrap();
        assert_eq!(s.phase_identity_holds(), Ok(false));
        let s = XState::real(ONES, ONES, [1.0, 1.0, 0.0, 1.0]).unwrap();
        assert_eq!(s.phase_identity_holds(), Err(Error::PhaseUndefined(3)));
        // antipodal: θ₁+θ₄ = π
        let s = XState::real(ONES, ONES, [1.0, 1.0, 1.0, -1.0]).unwrap();
        assert_eq!(s.phase_identity_holds(), Ok(false));
    }

    #[test]
    fn symmetry_closed_forms() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [5.0, 6.0, 7.0, 8.0];
        let cc = [c(0.1, 0.2), c(0.3, -0.4), c(-0.5, 0.6), c(0.7, 0.8)];
        let s = XState::from_parts(a, b, cc).unwrap();

        let t = s.local_symmetry(SymmetryOp::SwapBC);
        assert_eq!(t.a(), [1.0, 3.0, 2.0, 4.0]);
        assert_eq!(t.b(), [5.0, 7.0, 6.0, 8.0]);
        assert_eq!(t.c(), [cc[0], cc[2], cc[1], cc[3]]);

        let t = s.local_symmetry(SymmetryOp::SwapAC);
        assert_eq!(t.a(), [1.0, 8.0, 3.0, 6.0]);
        assert_eq!(t.b(), [5.0, 4.0, 7.0, 2.0]);
        assert_eq!(t.c(), [cc[0], cc[3].conj(), cc[2], cc[1].conj()]);

        for op in SymmetryOp::ALL {
            assert_eq!(s.local_symmetry(op).local_symmetry(op), s, "{op:?}");
        }
    }
}
