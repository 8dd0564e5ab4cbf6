//! Boundary curves for the two one-parameter example families, located by bisection.

use num_complex::Complex64;
use std::str::FromStr;

use crate::criteria::{
    classify, criterion_a, criterion_diag, criterion_phase, criterion_sufficient_eps, CriterionFn,
};
use crate::error::{Error, Result};
use crate::state::XState;

/// Bisection stops once the bracket is narrower than this.
pub const BISECTION_WIDTH: f64 = 1e-9;
pub const MIN_SAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveFamily {
    /// `X(1, 1, (r, r, r e^{iθ}, r))` over `θ`.
    Example1,
    /// `X(1, 1, (p, p, q, −q))` along rays `(p, q) = t (cos ψ, sin ψ)`.
    Example2,
    /// Inner and outer bounds of the sufficient criterion for the same family as `Example2`.
    SuffPhi,
}

impl FromStr for CurveFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(CurveFamily::Example1),
            "example2" => Ok(CurveFamily::Example2),
            "suffPhi" | "suffphi" | "suff_phi" => Ok(CurveFamily::SuffPhi),
            other => Err(Error::Parse(format!("unknown curve family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl CurveTable {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format_cell(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.header.iter().position(|h| *h == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }
}

fn format_cell(v: f64) -> String {
    format!("{v:.16e}")
}

/// Largest `t ∈ [0, hi]` with `holds(t)`, assuming `holds(0)` and a single crossing.
/// Returns `hi` when `holds(hi)`.
pub fn bisect_edge(holds: impl Fn(f64) -> bool, hi: f64) -> f64 {
    if holds(hi) {
        return hi;
    }
    let (mut lo, mut hi) = (0.0, hi);
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn example1_state(r: f64, theta: f64, tol: f64) -> Result<XState> {
    let re = Complex64::new(r, 0.0);
    XState::new([1.0; 4], [1.0; 4], [re, re, Complex64::from_polar(r, theta), re], tol)
}

pub fn example2_state(p: f64, q: f64, tol: f64) -> Result<XState> {
    let re = |x: f64| Complex64::new(x, 0.0);
    XState::new([1.0; 4], [1.0; 4], [re(p), re(p), re(q), re(-q)], tol)
}

fn angles(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| std::f64::consts::TAU * k as f64 / (n - 1) as f64)
}

fn example1(n: usize, tol: f64) -> CurveTable {
    let rows = angles(n)
        .map(|theta| {
            let separable = |r: f64| example1_state(r, theta, tol).is_ok_and(|s| classify(&s).is_separable());
            let ppt = |r: f64| example1_state(r, theta, tol).is_ok_and(|s| s.is_ppt().unwrap_or(false));
            let r_sep = bisect_edge(separable, 1.0);
            let r_ppt = bisect_edge(ppt, 2.0);
            vec![theta, r_sep, r_ppt]
        })
        .collect();
    CurveTable { header: vec!["theta", "r_separable", "r_ppt"], rows }
}

/// Edge of one criterion along a ray, capped at the positivity range.
fn ray_edge(dir: (f64, f64), tol: f64, test: CriterionFn) -> f64 {
    let limit = 1.0 / dir.0.abs().max(dir.1.abs());
    bisect_edge(
        |t| example2_state(t * dir.0, t * dir.1, tol).is_ok_and(|s| test(&s).is_ok_and(|r| r.pass)),
        limit,
    )
}

fn example2(n: usize, tol: f64) -> CurveTable {
    let rows = angles(n)
        .map(|psi| {
            let dir = (psi.cos(), psi.sin());
            vec![
                psi,
                dir.0,
                dir.1,
                ray_edge(dir, tol, criterion_diag),
                ray_edge(dir, tol, criterion_a),
                ray_edge(dir, tol, criterion_phase),
                ray_edge(dir, tol, criterion_sufficient_eps),
            ]
        })
        .collect();
    CurveTable { header: vec!["psi", "p_dir", "q_dir", "r_diag", "r_a_rho", "r_phase", "r_suff_phi"], rows }
}

fn suff_phi(n: usize, tol: f64) -> CurveTable {
    let rows = angles(n)
        .map(|psi| {
            let dir = (psi.cos(), psi.sin());
            vec![
                psi,
                dir.0,
                dir.1,
                ray_edge(dir, tol, criterion_sufficient_eps),
                1.0,
                ray_edge(dir, tol, criterion_diag),
            ]
        })
        .collect();
    CurveTable { header: vec!["psi", "p_dir", "q_dir", "r_inscribed", "r_circle", "r_circumscribed"], rows }
}

/// Samples `n ≥ 8` angles evenly over `[0, 2π]`, both ends included.
pub fn curve(family: CurveFamily, n: usize, tol: f64) -> Result<CurveTable> {
    if n < MIN_SAMPLES {
        return Err(Error::PreconditionFail("curve needs at least 8 samples"));
    }
    Ok(match family {
        CurveFamily::Example1 => example1(n, tol),
        CurveFamily::Example2 => example2(n, tol),
        CurveFamily::SuffPhi => suff_phi(n, tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

    #[test]
    fn example1_matches_closed_form() {
        let t = curve(CurveFamily::Example1, 13, 1e-9).unwrap();
        for row in &t.rows {
            let want = 1.0 / (1.0 + (row[0] / 2.0).sin().abs()).sqrt();
            assert!((row[1] - want).abs() < 2e-6, "theta {} got {} want {want}", row[0], row[1]);
            assert!((row[2] - 1.0).abs() < 2e-6);
        }
        assert!((t.rows[6][0] - PI).abs() < 1e-12);
        assert!((t.rows[6][1] - FRAC_1_SQRT_2).abs() < 1e-6);
    }

    #[test]
    fn example2_diagonal_ray() {
        let t = curve(CurveFamily::Example2, 9, 1e-9).unwrap();
        let row = &t.rows[1];
        assert!((row[0] - PI / 4.0).abs() < 1e-12);
        assert!((row[3] - SQRT_2).abs() < 1e-6);
        assert!((row[4] - 1.0).abs() < 1e-6);
        assert!((row[5] - 1.0).abs() < 1e-6);
        assert!((row[6] - 1.0).abs() < 1e-6);
        // along q = 0 the phase criterion is vacuous, so the edge is the positivity limit
        assert!((t.rows[0][5] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn suff_phi_bounds_ordered() {
        let t = curve(CurveFamily::SuffPhi, 16, 1e-9).unwrap();
        for row in &t.rows {
            assert!(row[3] <= row[4] + 1e-9 && row[4] <= row[5] + 1e-9);
        }
    }

    #[test]
    fn csv_format() {
        let t = curve(CurveFamily::Example1, 8, 1e-9).unwrap();
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "theta,r_separable,r_ppt");
        assert_eq!(lines.len(), 9);
        assert!(lines[1].starts_with("0.0000000000000000e0,"));
        assert_eq!(curve(CurveFamily::Example1, 7, 1e-9), Err(Error::PreconditionFail("curve needs at least 8 samples")));
        assert_eq!("suffPhi".parse::<CurveFamily>().unwrap(), CurveFamily::SuffPhi);
    }
}
