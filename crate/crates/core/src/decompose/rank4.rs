//! Rank-four X-states: the product-vector characterization and the interval
//! construction that splits off a diagonal remainder.

use num_complex::Complex64;

use crate::error::{Error, Result};
use super::remainder_terms;
use crate::product::{diagonal_of, diagonal_terms, ProductVector, WeightedDecomposition};
use crate::state::{approx_eq, approx_ge, XState};

/// X-part of `|ξ⟩⟨ξ|` together with the four sign-flipped vectors averaging to it.
pub fn product_xpart_family(xi: &ProductVector, tol: f64) -> (XState, [ProductVector; 4]) {
    (xi.xpart(tol), xi.xpart_family())
}

/// Source data of a rank-four certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rank4Data {
    pub xi: ProductVector,
    pub family: [ProductVector; 4],
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// `a₁a₄ = a₂a₃`, `√(a_i b_i) = |c_j|` for all `i, j`, and `c₁c₄ = c₂c₃`.
pub fn rank4_conditions(s: &XState) -> bool {
    let tol = s.tol();
    let (a, b, c) = (s.a(), s.b(), s.c());
    let r = s.big_r();
    if r <= tol {
        return false;
    }
    let r2 = r * r;
    let products_match = approx_eq(a[0] * a[3], a[1] * a[2], tol);
    let blocks_match = (0..4).all(|i| approx_eq(a[i] * b[i], r2, tol) && approx_eq(c[i].norm(), r, tol));
    let phase_match = (c[0] * c[3] - c[1] * c[2]).norm() <= tol * 1f64.max(r2);
    products_match && blocks_match && phase_match
}

/// Builds `ξ` with `X`-part equal to `s`; requires [`rank4_conditions`].
pub fn rank4_data(s: &XState) -> Result<Rank4Data> {
    if !rank4_conditions(s) {
        return Err(Error::ConditionsFail);
    }
    let r = s.big_r();
    let unit = s.scaled(1.0 / r);
    let (a, b) = (unit.a(), unit.b());
    let th = s.c().map(|z| z.arg());
    let alpha = (-th[1] - th[2]) / 2.0;
    let beta = (th[3] - th[1]) / 2.0;
    let gamma = (th[3] - th[2]) / 2.0;
    let re = |x: f64| Complex64::new(x, 0.0);
    let s1 = a[0].sqrt();
    let scale = re(1.0 / a[0]);
    let xi = ProductVector::new(
        [re(s1) * scale, Complex64::from_polar(b[3].sqrt(), alpha) * scale],
        [re(s1), Complex64::from_polar(a[2].sqrt(), beta)],
        [re(s1), Complex64::from_polar(a[1].sqrt(), gamma)],
    );
    Ok(Rank4Data { xi, family: xi.xpart_family(), alpha, beta, gamma })
}

/// Four-term certificate `¼ Σ_k |ξ(k)⟩⟨ξ(k)|` scaled back to `s`.
pub fn decompose_rank4(s: &XState) -> Result<WeightedDecomposition> {
    let data = rank4_data(s)?;
    let r = s.big_r();
    let mut d = WeightedDecomposition::new();
    for v in data.family {
        d.push_unnormalized(0.25 * r, v);
    }
    Ok(d)
}

fn suff4_preconditions(s: &XState) -> Result<()> {
    let tol = s.tol();
    if !s.is_positive() {
        return Err(Error::NotAState);
    }
    if !s.has_common_magnitude() {
        return Err(Error::PreconditionFail("anti-diagonal magnitudes differ"));
    }
    let c = s.c();
    let r = s.big_r();
    if (c[0] * c[3] - c[1] * c[2]).norm() > tol * 1f64.max(r * r) {
        return Err(Error::PreconditionFail("c1 c4 differs from c2 c3"));
    }
    if !approx_ge(s.delta(), r, tol) {
        return Err(Error::PreconditionFail("delta below R"));
    }
    Ok(())
}

/// `x` in `[lo, hi]` along the geometric path, `lo^(1−u) hi^u`.
fn geometric(lo: f64, hi: f64, u: f64) -> f64 {
    lo.powf(1.0 - u) * hi.powf(u)
}

/// Common-magnitude state with `c₁c₄ = c₂c₃` and `Δ ≥ R` as a rank-four part plus
/// computational-basis terms.
pub fn decompose_suff4(s: &XState) -> Result<WeightedDecomposition> {
    suff4_preconditions(s)?;
    let tol = s.tol();
    let r = s.big_r();
    if r <= tol {
        return Ok(diagonal_terms(&diagonal_of(&s.a(), &s.b()), 0.0));
    }
    let unit = s.scaled(1.0 / r);
    let (a, b) = (unit.a(), unit.b());

    // every a_i b_i ≥ 1 up to rounding; order the bounds so the intervals are proper
    let interval = |lo: f64, hi: f64| if lo <= hi { (lo, hi) } else { (hi, hi) };
    let i1 = interval(1.0 / a[0], b[0]);
    let i2 = interval(1.0 / b[1], a[1]);
    let i3 = interval(1.0 / b[2], a[2]);
    let lo_prod = (1.0 / b[3]).max(i1.0 * i2.0 * i3.0);
    let hi_prod = a[3].min(i1.1 * i2.1 * i3.1);
    let target = if lo_prod <= hi_prod { 0.5 * (lo_prod + hi_prod) } else { hi_prod };

    let log_lo = i1.0.ln() + i2.0.ln() + i3.0.ln();
    let log_hi = i1.1.ln() + i2.1.ln() + i3.1.ln();
    let u = if log_hi - log_lo > 0.0 {
        ((target.ln() - log_lo) / (log_hi - log_lo)).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let x1 = geometric(i1.0, i1.1, u);
    let x2 = geometric(i2.0, i2.1, u);
    let x3 = geometric(i3.0, i3.1, u);
    let a_new = [1.0 / x1, x2, x3, x1 * x2 * x3];
    let b_new = a_new.map(|v| 1.0 / v);

    let core = XState::raw(a_new, b_new, unit.c(), tol);
    let mut d = decompose_rank4(&core).map_err(|_| Error::PreconditionFail("rank-four part invalid"))?;

    d.extend_scaled(&remainder_terms(&diagonal_of(&a, &b), &diagonal_of(&a_new, &b_new), tol), 1.0);
    Ok(d.scaled(r))
}
