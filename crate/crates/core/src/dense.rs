//! Full 8×8 complex matrices over `C² ⊗ C² ⊗ C²`.
//!
//! Basis index `4i + 2j + k` is the ket `|ijk⟩`, with `i` on system A.

use num_complex::Complex64;
use std::ops::{Add, Index, IndexMut, Mul};

use crate::state::{SymmetryOp, System};

pub const DIM: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dense8(pub [[Complex64; DIM]; DIM]);

impl Default for Dense8 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Dense8 {
    pub fn zeros() -> Self {
        Dense8([[Complex64::new(0.0, 0.0); DIM]; DIM])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            m.0[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// `|v⟩⟨v|`, without normalization.
    pub fn outer(v: &[Complex64; DIM]) -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = v[i] * v[j].conj();
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for e in row.iter_mut() {
                *e *= s;
            }
        }
        m
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0, |acc, e| acc.max(e.norm()))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Dense8) -> f64 {
        let mut d = 0.0f64;
        for i in 0..DIM {
            for j in 0..DIM {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }

    /// `max |m - m†|`.
    pub fn hermitian_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Transpose on a single tensor factor: swaps that bit between row and column index.
    pub fn partial_transpose(&self, sys: System) -> Self {
        let bit = sys.bit();
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                let (bi, bj) = (i & bit, j & bit);
                let ni = (i & !bit) | bj;
                let nj = (j & !bit) | bi;
                m.0[ni][nj] = self.0[i][j];
            }
        }
        m
    }

    /// `U m U†` for the basis permutation `U|i⟩ = |perm[i]⟩`.
    pub fn permute(&self, perm: &[usize; DIM]) -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[perm[i]][perm[j]] = self.0[i][j];
            }
        }
        m
    }

    pub fn apply_symmetry(&self, op: SymmetryOp) -> Self {
        self.permute(&op.permutation())
    }

    /// True when every entry off the diagonal and anti-diagonal is below `tol`.
    pub fn is_x_shaped(&self, tol: f64) -> bool {
        (0..DIM).all(|i| {
            (0..DIM).all(|j| i == j || i + j == DIM - 1 || self.0[i][j].norm() <= tol)
        })
    }
}

impl Index<(usize, usize)> for Dense8 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Dense8 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Add for Dense8 {
    type Output = Dense8;
    fn add(mut self, rhs: Dense8) -> Dense8 {
        for i in 0..DIM {
            for j in 0..DIM {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl Mul for Dense8 {
    type Output = Dense8;
    fn mul(self, rhs: Dense8) -> Dense8 {
        let mut m = Dense8::zeros();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.0[i][k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..DIM {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn partial_transpose_is_involution() {
        let mut m = Dense8::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = c(i as f64, j as f64 * 0.5);
            }
        }
        for sys in System::ALL {
            assert_eq!(m.partial_transpose(sys).partial_transpose(sys), m);
        }
    }

    #[test]
    fn full_partial_transpose_is_transpose() {
        let mut m = Dense8::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = c((i * 8 + j) as f64, -(j as f64));
            }
        }
        let all = m
            .partial_transpose(System::A)
            .partial_transpose(System::B)
            .partial_transpose(System::C);
        assert_eq!(all, m.transpose());
    }

    #[test]
    fn product_of_identity() {
        let m = Dense8::identity().scale(2.0);
        assert_eq!(m * Dense8::identity(), m);
    }
}
