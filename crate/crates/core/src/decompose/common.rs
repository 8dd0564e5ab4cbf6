//! States whose anti-diagonal entries share one modulus, and mixtures of them.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use super::rank4::decompose_suff4;
use crate::error::{Error, Result};
use crate::product::WeightedDecomposition;
use crate::state::{approx_ge, XState};

/// Separability bound for common magnitude: `R·√(1 + |sin φ/2|)`, with `φ` taken as zero
/// when some entry vanishes.
pub(crate) fn phase_bound(s: &XState) -> f64 {
    let sin_half = s.sin_half_phase().unwrap_or(0.0);
    s.big_r() * (1.0 + sin_half).sqrt()
}

/// Splits a separable common-magnitude state into two states with zero phase difference
/// and decomposes each.
pub fn decompose_common_magnitude(s: &XState) -> Result<WeightedDecomposition> {
    if !s.is_positive() {
        return Err(Error::NotAState);
    }
    if !s.has_common_magnitude() {
        return Err(Error::NotCommonMagnitude);
    }
    let tol = s.tol();
    let r_big = s.big_r();
    if r_big <= tol {
        return decompose_suff4(&s.with_c([Complex64::new(0.0, 0.0); 4]));
    }
    if !approx_ge(s.delta(), phase_bound(s), tol) {
        return Err(Error::NotSeparable);
    }
    let unit = s.scaled(1.0 / r_big);
    // normalize each modulus to exactly 1 so the two halves have zero phase difference
    let c = unit.c().map(|z| z / z.norm());
    let phi = unit.phase_difference().unwrap_or(0.0);
    let half = phi / 2.0;
    let radius = (1.0 + half.sin()).sqrt();
    let u = Complex64::from_polar(radius, half / 2.0);
    let v = Complex64::from_polar(radius, half / 2.0 - FRAC_PI_2);
    // 1 lies on the segment [u, v]; p u + q v = 1 with p + q = 1
    let p = ((Complex64::new(1.0, 0.0) - v) / (u - v)).re.clamp(0.0, 1.0);
    let q = 1.0 - p;

    let rotated = |w: Complex64| [c[0] * w.conj(), c[1] * w, c[2] * w, c[3] * w.conj()];
    let mut d = WeightedDecomposition::new();
    for (weight, w) in [(p, u), (q, v)] {
        if weight <= tol {
            continue;
        }
        let part = unit.with_c(rotated(w));
        let piece = decompose_suff4(&part).map_err(|_| Error::NotSeparable)?;
        d.extend_scaled(&piece, weight);
    }
    Ok(d.scaled(r_big))
}

/// Convex weights over the sixteen sign strings together with the component states.
pub fn eps_components(s: &XState) -> Vec<(f64, XState)> {
    let r_big = s.big_r();
    let tol = s.tol();
    let units: [Complex64; 4] = s.c().map(|z| {
        if z.norm() > tol {
            z / z.norm()
        } else {
            Complex64::new(1.0, 0.0)
        }
    });
    let lambdas: [f64; 4] = s.c().map(|z| (0.5 * (1.0 + z.norm() / r_big)).clamp(0.0, 1.0));
    let mut out = Vec::with_capacity(16);
    for mask in 0..16usize {
        let mut weight = 1.0;
        let mut c = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            let negative = (mask >> i) & 1 == 1;
            weight *= if negative { 1.0 - lambdas[i] } else { lambdas[i] };
            c[i] = units[i] * if negative { -r_big } else { r_big };
        }
        if weight > 0.0 {
            out.push((weight, s.with_c(c)));
        }
    }
    out
}

/// Sufficient-criterion certificate: a convex combination of common-magnitude states,
/// each decomposed by [`decompose_common_magnitude`].
pub fn decompose_eps_mixture(s: &XState) -> Result<WeightedDecomposition> {
    if !s.is_positive() {
        return Err(Error::NotAState);
    }
    let tol = s.tol();
    let r_big = s.big_r();
    if r_big <= tol {
        return decompose_common_magnitude(&s.with_c([Complex64::new(0.0, 0.0); 4]));
    }
    let mut d = WeightedDecomposition::new();
    for (weight, part) in eps_components(s) {
        if weight <= tol * tol {
            continue;
        }
        let piece = decompose_common_magnitude(&part)
            .map_err(|_| Error::PreconditionFail("sufficient criterion does not hold"))?;
        d.extend_scaled(&piece, weight);
    }
    Ok(d)
}
