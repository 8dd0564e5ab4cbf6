//! Cyclic Jacobi eigenvalues for 8×8 Hermitian matrices.
//!
//! `H = A + iB` is diagonalized through its real symmetric form `[[A, -B], [B, A]]`,
//! whose spectrum is that of `H` with every eigenvalue doubled.

use crate::dense::{Dense8, DIM};
use crate::error::{Error, Result};

const N: usize = 2 * DIM;
const MAX_SWEEPS: usize = 100;
const THRESHOLD: f64 = 1e-13;

fn real_form(m: &Dense8) -> [[f64; N]; N] {
    let mut s = [[0.0; N]; N];
    for i in 0..DIM {
        for j in 0..DIM {
            let z = m.0[i][j];
            s[i][j] = z.re;
            s[i + DIM][j + DIM] = z.re;
            s[i][j + DIM] = -z.im;
            s[i + DIM][j] = z.im;
        }
    }
    s
}

fn off_norm(s: &[[f64; N]; N]) -> f64 {
    let mut acc = 0.0;
    for (i, row) in s.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                acc += v * v;
            }
        }
    }
    acc.sqrt()
}

fn jacobi_symmetric(mut s: [[f64; N]; N]) -> [f64; N] {
    let frob = s.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    if frob == 0.0 {
        return [0.0; N];
    }
    for _ in 0..MAX_SWEEPS {
        if off_norm(&s) <= THRESHOLD * frob {
            break;
        }
        for p in 0..N - 1 {
            for q in p + 1..N {
                let apq = s[p][q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (s[q][q] - s[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for row in s.iter_mut() {
                    let (skp, skq) = (row[p], row[q]);
                    row[p] = c * skp - sn * skq;
                    row[q] = sn * skp + c * skq;
                }
                let (sp, sq) = (s[p], s[q]);
                for k in 0..N {
                    s[p][k] = c * sp[k] - sn * sq[k];
                    s[q][k] = sn * sp[k] + c * sq[k];
                }
            }
        }
    }
    let mut ev = [0.0; N];
    for (i, e) in ev.iter_mut().enumerate() {
        *e = s[i][i];
    }
    ev
}

/// Eigenvalues in ascending order.
pub fn hermitian_eigenvalues(m: &Dense8) -> Result<[f64; DIM]> {
    let defect = m.hermitian_defect();
    if defect > 1e-9 * 1f64.max(m.max_abs()) {
        return Err(Error::NotHermitian(defect));
    }
    let mut doubled = jacobi_symmetric(real_form(m));
    doubled.sort_by(|x, y| x.total_cmp(y));
    let mut ev = [0.0; DIM];
    for (i, e) in ev.iter_mut().enumerate() {
        *e = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    Ok(ev)
}

/// Number of eigenvalues above `tol · max|λ|`.
pub fn dense_rank(m: &Dense8, tol: f64) -> Result<usize> {
    let ev = hermitian_eigenvalues(m)?;
    let top = ev.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if top == 0.0 {
        return Ok(0);
    }
    Ok(ev.iter().filter(|v| v.abs() > tol * top).count())
}

/// Smallest eigenvalue relative to the spectral scale, `min λ / max(1, max|λ|)`.
pub fn dense_min_eigenvalue(m: &Dense8) -> Result<f64> {
    let ev = hermitian_eigenvalues(m)?;
    let top = ev.iter().fold(1f64, |acc, v| acc.max(v.abs()));
    Ok(ev[0] / top)
}

/// Positive semidefinite within `tol` relative to the spectral scale.
pub fn dense_is_psd(m: &Dense8, tol: f64) -> Result<bool> {
    Ok(dense_min_eigenvalue(m)? >= -tol)
}
