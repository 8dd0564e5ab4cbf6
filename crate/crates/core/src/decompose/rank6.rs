//! X-states of rank at most six: exact separability test, constructive certificates and
//! minimal-length decompositions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;

use super::rank4::decompose_rank4;
use super::remainder_terms;
use crate::dense::Dense8;
use crate::error::{Error, Result};
use crate::product::{diagonal_of, ProductVector, WeightedDecomposition};
use crate::state::{approx_eq, approx_ge, SymmetryOp, XState};

/// Split of the four blocks into the pair at full modulus and the remaining two
/// (1-based block indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub pair: [usize; 2],
    pub rest: [usize; 2],
}

/// Candidate pairs in lexicographic order.
pub const PAIRS: [[usize; 2]; 6] = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]];

impl Partition {
    pub fn from_pair(pair: [usize; 2]) -> Self {
        let mut rest = [0; 2];
        let mut k = 0;
        for i in 1..=4 {
            if !pair.contains(&i) {
                rest[k] = i;
                k += 1;
            }
        }
        Partition { pair, rest }
    }
}

/// Symmetry operations taking a pair to `{1, 2}`; apply in order.
pub fn canonical_ops(pair: [usize; 2]) -> Vec<SymmetryOp> {
    use SymmetryOp::*;
    match pair {
        [1, 2] => vec![],
        [1, 3] => vec![SwapBC],
        [1, 4] => vec![SwapAC],
        [2, 3] => vec![FlipC, SwapAC],
        [2, 4] => vec![FlipC, SwapBC],
        [3, 4] => vec![FlipB],
        _ => panic!("invalid pair {pair:?}"),
    }
}

/// Which condition of the rank-six characterization failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rank6Condition {
    /// `Δ ≥ R`.
    Diagonal,
    /// A pair of blocks at full modulus with equal moduli on the other two.
    Partition,
    /// Phase identity when `r > 0`.
    PhaseIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rank6Check {
    Separable(Partition),
    /// The violated condition with its evaluated sides, `lhs > rhs`.
    Entangled { condition: Rank6Condition, lhs: f64, rhs: f64 },
}

fn pair_at_full_modulus(s: &XState, pair: [usize; 2]) -> bool {
    let (a, b, c) = (s.a(), s.b(), s.c());
    let r = s.big_r();
    pair.iter().all(|&i| {
        let k = i - 1;
        approx_eq((a[k] * b[k]).sqrt(), r, s.tol()) && approx_eq(c[k].norm(), r, s.tol())
    })
}

fn rest_matches(s: &XState, rest: [usize; 2]) -> bool {
    let (a, b, c) = (s.a(), s.b(), s.c());
    let r = s.big_r();
    let [j, k] = rest.map(|i| i - 1);
    approx_eq(c[j].norm(), c[k].norm(), s.tol())
        && [j, k].iter().all(|&m| approx_ge((a[m] * b[m]).sqrt(), r, s.tol()))
}

/// Exact separability test for non-diagonal states of rank at most six.
pub fn check_rank6_separability(s: &XState) -> Result<Rank6Check> {
    let rank = s.rank()?;
    if rank > 6 {
        return Err(Error::NotApplicable("rank exceeds six"));
    }
    if s.is_diagonal() {
        return Err(Error::NotApplicable("state is diagonal"));
    }
    let (delta, r_big) = (s.delta(), s.big_r());
    if !approx_ge(delta, r_big, s.tol()) {
        return Ok(Rank6Check::Entangled { condition: Rank6Condition::Diagonal, lhs: r_big, rhs: delta });
    }
    let mut evidence = None;
    let mut found = None;
    for pair in PAIRS {
        if !pair_at_full_modulus(s, pair) {
            continue;
        }
        let part = Partition::from_pair(pair);
        if rest_matches(s, part.rest) {
            found = Some(part);
            break;
        }
        if evidence.is_none() {
            let c = s.c();
            let [j, k] = part.rest.map(|i| i - 1);
            evidence = Some((c[j].norm() - c[k].norm()).abs());
        }
    }
    let Some(part) = found else {
        return Ok(Rank6Check::Entangled {
            condition: Rank6Condition::Partition,
            lhs: evidence.unwrap_or(r_big),
            rhs: 0.0,
        });
    };
    if s.small_r() > s.tol() && !s.phase_identity_holds()? {
        return Ok(Rank6Check::Entangled {
            condition: Rank6Condition::PhaseIdentity,
            lhs: s.sin_half_phase().unwrap_or(0.0),
            rhs: 0.0,
        });
    }
    Ok(Rank6Check::Separable(part))
}

fn separable_partition(s: &XState) -> Result<Partition> {
    match check_rank6_separability(s)? {
        Rank6Check::Separable(p) => Ok(p),
        Rank6Check::Entangled { .. } => Err(Error::NotSeparable),
    }
}

/// Canonical image of a separable state together with the operations producing it.
fn canonicalize(s: &XState) -> Result<(XState, Partition, Vec<SymmetryOp>)> {
    let part = separable_partition(s)?;
    let ops = canonical_ops(part.pair);
    Ok((s.apply_ops(&ops), part, ops))
}

fn undo(d: &WeightedDecomposition, ops: &[SymmetryOp]) -> WeightedDecomposition {
    let inverse: Vec<SymmetryOp> = ops.iter().rev().copied().collect();
    d.apply_symmetries(&inverse)
}

/// Two rank-four states and a diagonal remainder summing to a canonical state:
/// `s = ½ first + ½ second + diag`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rank6Split {
    pub partition: Partition,
    pub canonical_ops: Vec<SymmetryOp>,
    pub lambda: f64,
    pub first: XState,
    pub second: XState,
    /// Remainder in basis order.
    pub diagonal: [f64; 8],
}

/// Midpoint split of a separable rank-≤6 state, in canonical coordinates.
pub fn split_rank6(s: &XState) -> Result<Rank6Split> {
    let (t, partition, ops) = canonicalize(s)?;
    let tol = t.tol();
    let (a, b, c) = (t.a(), t.b(), t.c());
    let r_big = t.big_r();
    let small = c[2].norm().max(c[3].norm());
    let th1 = c[0].arg();
    let th2 = c[1].arg();
    let (th3, th4, phi) = if small > tol {
        (c[2].arg(), c[3].arg(), (small / r_big).clamp(-1.0, 1.0).acos())
    } else {
        // any phases obeying the identity; this choice reproduces c'' = −c' on blocks 3, 4
        (th1 - FRAC_PI_2, th2 - FRAC_PI_2, FRAC_PI_2)
    };
    let lo = (a[0] / a[2]).max(a[1] / a[3]);
    let hi = (b[3] / b[1]).min(b[2] / b[0]);
    let lambda = if lo <= hi { 0.5 * (lo + hi) } else { hi };
    let a_new = [a[0], a[1], a[0] / lambda, a[1] / lambda];
    let b_new = [b[0], b[1], lambda * b[0], lambda * b[1]];
    let c_first = [c[0], c[1], Complex64::from_polar(r_big, th3 + phi), Complex64::from_polar(r_big, th4 + phi)];
    let c_second = [c[0], c[1], Complex64::from_polar(r_big, th3 - phi), Complex64::from_polar(r_big, th4 - phi)];
    let full = diagonal_of(&a, &b);
    let part = diagonal_of(&a_new, &b_new);
    let diagonal = std::array::from_fn(|i| (full[i] - part[i]).max(0.0));
    Ok(Rank6Split {
        partition,
        canonical_ops: ops,
        lambda,
        first: XState::raw(a_new, b_new, c_first, tol),
        second: XState::raw(a_new, b_new, c_second, tol),
        diagonal,
    })
}

/// Certificate from two rank-four halves plus basis terms.
pub fn decompose_rank6(s: &XState) -> Result<WeightedDecomposition> {
    let split = split_rank6(s)?;
    let tol = s.tol();
    let mut d = WeightedDecomposition::new();
    for half in [&split.first, &split.second] {
        let piece = decompose_rank4(half).map_err(|_| Error::NotSeparable)?;
        d.extend_scaled(&piece, 0.5);
    }
    d.extend_scaled(&remainder_terms(&split.diagonal, &[0.0; 8], tol), 1.0);
    Ok(undo(&d, &split.canonical_ops))
}

/// Rank-five certificate: the unique rank-four part plus one or two basis terms.
pub fn decompose_rank5(s: &XState) -> Result<WeightedDecomposition> {
    let rank = s.rank()?;
    if rank != 5 {
        return Err(Error::WrongRank { expected: "5", found: rank });
    }
    separable_partition(s)?;
    let tol = s.tol();
    let (a, b, c) = (s.a(), s.b(), s.c());
    let r2 = s.big_r().powi(2);
    let i4 = s.block_ranks().iter().position(|&k| k == 2).ok_or(Error::NotSeparable)?;
    let mut d_a = a;
    let mut e_b = b;
    d_a[i4] = match i4 {
        0 => a[1] * a[2] / a[3],
        1 => a[0] * a[3] / a[2],
        2 => a[0] * a[3] / a[1],
        _ => a[1] * a[2] / a[0],
    };
    e_b[i4] = r2 / d_a[i4];
    let core = XState::raw(d_a, e_b, c, tol);
    let mut out = decompose_rank4(&core).map_err(|_| Error::NotSeparable)?;
    out.extend_scaled(&remainder_terms(&diagonal_of(&a, &b), &diagonal_of(&d_a, &e_b), tol), 1.0);
    Ok(out)
}

/// `Γ(ρ)`: the largest rank among the state and its three partial transposes.
pub fn gamma(s: &XState) -> Result<usize> {
    let rank = s.rank()?;
    Ok(s.pt_ranks().into_iter().fold(rank, usize::max))
}

fn exceptional(t: &XState) -> bool {
    let (a, b) = (t.a(), t.b());
    !approx_eq(a[0] * a[3], a[1] * a[2], t.tol()) && !approx_eq(b[0] * b[3], b[1] * b[2], t.tol())
}

fn require_rank6(s: &XState) -> Result<()> {
    let rank = s.rank()?;
    if rank != 6 {
        return Err(Error::WrongRank { expected: "6", found: rank });
    }
    if s.is_diagonal() {
        return Err(Error::PreconditionFail("state is diagonal"));
    }
    Ok(())
}

/// Minimal number of product states for a separable rank-six state.
pub fn length_rank6(s: &XState) -> Result<usize> {
    require_rank6(s).map_err(|_| Error::PreconditionFail("not a non-diagonal rank-six state"))?;
    let (t, _, _) = canonicalize(s).map_err(|_| Error::PreconditionFail("state is not separable"))?;
    let g = gamma(&t)?;
    Ok(if g == 7 && exceptional(&t) { 8 } else { g })
}

/// Parameters of a minimal-length rank-six decomposition, in canonical coordinates with
/// `R` scaled to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rank6Plan {
    pub partition: Partition,
    pub canonical_ops: Vec<SymmetryOp>,
    pub t: f64,
    pub theta: f64,
    pub r: f64,
    pub s: f64,
    pub alphas: [Complex64; 3],
    pub betas: [Complex64; 3],
    pub p: [f64; 3],
    pub q: [f64; 3],
    pub z: Option<[Complex64; 2]>,
    pub zprime: Option<[Complex64; 2]>,
    pub a_plus: f64,
    pub a_minus: f64,
    pub b_plus: f64,
    pub b_minus: f64,
    pub x: f64,
    pub y: f64,
    pub gamma_rho: usize,
    pub ell_rho: usize,
}

/// Roots `r ≥ s` for the canonical, unit-modulus state.
fn choose_rs(u: &XState, gamma_rho: usize) -> (f64, f64, f64, f64) {
    let tol = u.tol();
    let (a, b) = (u.a(), u.b());
    let p3 = a[2] * b[2];
    let p4 = a[3] * b[3];
    let at_one_3 = approx_eq(p3, 1.0, tol);
    let at_one_4 = approx_eq(p4, 1.0, tol);
    let equal = |w: f64| (w, w, 2.0 * w, w * w);
    if at_one_3 && at_one_4 {
        return equal(a[3]);
    }
    if gamma_rho == 7 && approx_eq(a[0] * a[3], a[1] * a[2], tol) {
        return equal(a[3]);
    }
    if gamma_rho == 7 && approx_eq(b[0] * b[3], b[1] * b[2], tol) {
        return equal(1.0 / b[3]);
    }
    let k = b[0] * a[1] * a[2];
    let l = a[0] * b[1] * b[2];
    let den = b[3] * (p3 - 1.0) + l * (p4 - 1.0);
    let x = 2.0 * (p3 * p4 - 1.0) / den;
    let y = (a[3] * (p3 - 1.0) + k * (p4 - 1.0)) / den;
    let disc = (x * x - 4.0 * y).max(0.0);
    let root = disc.sqrt();
    let r = 0.5 * (x + root);
    let s = 0.5 * (x - root);
    if (r - s).abs() <= tol * r.max(1.0) {
        let m = 0.5 * (r + s);
        return (m, m, x, y);
    }
    (r, s, x, y)
}

/// Angles and weights of one family; the second and third roots coincide when `t = 1`.
fn family(scale: f64, t: f64, theta: f64) -> ([Complex64; 3], [f64; 3]) {
    let base = Complex64::from_polar(scale.sqrt(), theta);
    let w = (1.0 - t * t).max(0.0).sqrt();
    let alphas = [base, base * Complex64::new(-t, w), base * Complex64::new(-t, -w)];
    let p = [t / (2.0 * (1.0 + t)), 1.0 / (4.0 * (1.0 + t)), 1.0 / (4.0 * (1.0 + t))];
    (alphas, p)
}

/// `(α c₁^½, b₁^½) ⊗ (α⁻¹ c₂^½, ±b₂^½) ⊗ (a₁^½ c₁^½, ±a₂^½ c₂^½)`.
fn xi_vector(u: &XState, alpha: Complex64, sign: f64) -> ProductVector {
    let (a, b, c) = (u.a(), u.b(), u.c());
    let h1 = c[0].sqrt();
    let h2 = c[1].sqrt();
    let re = |x: f64| Complex64::new(x, 0.0);
    ProductVector::new(
        [alpha * h1, re(b[0].sqrt())],
        [h2 / alpha, re(sign * b[1].sqrt())],
        [re(a[0].sqrt()) * h1, re(sign * a[1].sqrt()) * h2],
    )
}

/// Adds the family terms, merging the two roots when they coincide.
fn push_family(
    d: &mut WeightedDecomposition,
    u: &XState,
    alphas: &[Complex64; 3],
    p: &[f64; 3],
    sign: f64,
) {
    let merged = (alphas[1] - alphas[2]).norm() <= u.tol() * alphas[1].norm().max(1.0);
    d.push_unnormalized(p[0], xi_vector(u, alphas[0], sign));
    if merged {
        d.push_unnormalized(p[1] + p[2], xi_vector(u, alphas[1], sign));
    } else {
        d.push_unnormalized(p[1], xi_vector(u, alphas[1], sign));
        d.push_unnormalized(p[2], xi_vector(u, alphas[2], sign));
    }
}

/// Product vectors covering a PSD 2×2 block of the remainder; `embed` maps the local
/// vector into the block's slot. Returns the vector of a rank-one block.
fn block_terms(
    d: &mut WeightedDecomposition,
    m: [[Complex64; 2]; 2],
    tol: f64,
    embed: impl Fn([Complex64; 2]) -> ProductVector,
) -> Option<[Complex64; 2]> {
    let m00 = m[0][0].re.max(0.0);
    let m11 = m[1][1].re.max(0.0);
    let m01 = m[0][1];
    let cutoff = tol;
    if m00 <= cutoff && m11 <= cutoff {
        return None;
    }
    let zero = Complex64::new(0.0, 0.0);
    let defect = (m00 * m11 - m01.norm_sqr()).abs();
    if defect <= tol * m00.max(m11).max(1.0).powi(2) {
        let z = if m00 >= m11 {
            let s = m00.sqrt();
            [Complex64::new(s, 0.0), m01.conj() / s]
        } else {
            let s = m11.sqrt();
            [m01 / s, Complex64::new(s, 0.0)]
        };
        d.push_unnormalized(1.0, embed(z));
        return Some(z);
    }
    // full-rank block: split by a Cholesky step so the certificate stays exact
    let s = m00.sqrt();
    let first = [Complex64::new(s, 0.0), m01.conj() / s];
    let tail = (m11 - m01.norm_sqr() / m00).max(0.0).sqrt();
    d.push_unnormalized(1.0, embed(first));
    d.push_unnormalized(1.0, embed([zero, Complex64::new(tail, 0.0)]));
    None
}

fn sub_block(m: &Dense8, i: usize, j: usize) -> [[Complex64; 2]; 2] {
    [[m.0[i][i], m.0[i][j]], [m.0[j][i], m.0[j][j]]]
}

/// Minimal-length certificate for a separable non-diagonal rank-six state.
pub fn optimal_decompose_rank6(s: &XState) -> Result<(WeightedDecomposition, Rank6Plan)> {
    require_rank6(s)?;
    let (t_state, partition, ops) = canonicalize(s)?;
    let tol = s.tol();
    let r_big = t_state.big_r();
    let u = t_state.scaled(1.0 / r_big);
    let c4 = u.c()[3];
    let t = 0.5 * (1.0 + c4.norm().min(1.0));
    let theta = if c4.norm() <= tol { 0.0 } else { c4.arg() / 2.0 };
    let gamma_rho = gamma(&t_state)?;
    let (r, sv, x, y) = choose_rs(&u, gamma_rho);

    let (alphas, p) = family(r, t, theta);
    let (betas, q) = family(sv, t, theta);
    let mut d = WeightedDecomposition::new();
    push_family(&mut d, &u, &alphas, &p, 1.0);
    push_family(&mut d, &u, &betas, &q, -1.0);

    let rest = u.embed() + d.recompose().scale(-1.0);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let z = block_terms(&mut d, sub_block(&rest, 2, 3), tol, |z| {
        ProductVector::new([one, zero], [zero, one], z)
    });
    let zprime = block_terms(&mut d, sub_block(&rest, 4, 5), tol, |z| {
        ProductVector::new([zero, one], [one, zero], z)
    });

    let sum_sq = |v: &[Complex64; 3], w: &[f64; 3], power: i32| -> f64 {
        v.iter().zip(w).map(|(a, p)| p * a.norm_sqr().powi(power)).sum()
    };
    let (ap, aq) = (sum_sq(&alphas, &p, 1), sum_sq(&betas, &q, 1));
    let (bp, bq) = (sum_sq(&alphas, &p, -1), sum_sq(&betas, &q, -1));
    let ell_rho = d.len();
    let plan = Rank6Plan {
        partition,
        canonical_ops: ops.clone(),
        t,
        theta,
        r,
        s: sv,
        alphas,
        betas,
        p,
        q,
        z,
        zprime,
        a_plus: ap + aq,
        a_minus: ap - aq,
        b_plus: bp + bq,
        b_minus: bp - bq,
        x,
        y,
        gamma_rho,
        ell_rho,
    };
    Ok((undo(&d.scaled(r_big), &ops), plan))
}

/// Extreme points of the separable X-states: non-diagonal of rank four, or diagonal of
/// rank one.
pub fn is_extreme_in_sx(s: &XState) -> Result<bool> {
    let rank = s.rank()?;
    if s.is_diagonal() {
        return Ok(rank == 1);
    }
    if rank <= 6 {
        separable_partition(s)?;
        return Ok(rank == 4);
    }
    match crate::criteria::classify(s) {
        crate::criteria::Verdict::Separable { .. } => Ok(false),
        _ => Err(Error::NotSeparable),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_decomposition;

    const ONES: [f64; 4] = [1.0; 4];

    fn real(a: [f64; 4], b: [f64; 4], c: [f64; 4]) -> XState {
        XState::real(a, b, c).unwrap()
    }

    #[test]
    fn check_examples() {
        let s = real(ONES, ONES, [1.0, 1.0, 0.5, 0.5]);
        assert_eq!(
            check_rank6_separability(&s).unwrap(),
            Rank6Check::Separable(Partition::from_pair([1, 2]))
        );
        let s = real(ONES, ONES, [1.0, 1.0, 0.5, -0.5]);
        assert!(matches!(
            check_rank6_separability(&s).unwrap(),
            Rank6Check::Entangled { condition: Rank6Condition::PhaseIdentity, .. }
        ));
        for r in [-0.4, 0.0, 0.3, 0.99] {
            let s = real(ONES, ONES, [1.0, r, r, 1.0]);
            assert_eq!(
                check_rank6_separability(&s).unwrap(),
                Rank6Check::Separable(Partition::from_pair([1, 4])),
                "r = {r}"
            );
        }
        assert!(check_rank6_separability(&real(ONES, ONES, [0.5; 4])).is_err());
        assert!(check_rank6_separability(&real(ONES, ONES, [0.0; 4])).is_err());
    }

    #[test]
    fn zero_rest_half_sum() {
        let s = real(ONES, ONES, [1.0, 1.0, 0.0, 0.0]);
        let split = split_rank6(&s).unwrap();
        assert_eq!(split.diagonal, [0.0; 8]);
        let first = split.first.c().map(|z| z.re);
        let second = split.second.c().map(|z| z.re);
        for (got, want) in [(first, [1.0, 1.0, 1.0, 1.0]), (second, [1.0, 1.0, -1.0, -1.0])] {
            for i in 0..4 {
                assert!((got[i] - want[i]).abs() < 1e-15);
            }
        }
        let d = decompose_rank6(&s).unwrap();
        assert_eq!(d.len(), 8);
        assert!(verify_decomposition(&s, &d, 1e-12));
    }

    #[test]
    fn rank6_certificates() {
        let cases = [
            real(ONES, ONES, [1.0, 1.0, 0.5, 0.5]),
            real(ONES, ONES, [1.0, 0.3, 0.3, 1.0]),
            real(ONES, ONES, [0.3, 1.0, 1.0, 0.3]),
            real(ONES, ONES, [1.0, 0.5, 1.0, 0.5]),
            real(ONES, ONES, [0.5, 1.0, 0.5, 1.0]),
            real(ONES, ONES, [0.5, 0.5, 1.0, 1.0]),
            real([1.0, 1.0, 2.0, 2.0], [1.0, 1.0, 2.0, 2.0], [1.0, 1.0, 0.5, 0.5]),
        ];
        for s in cases {
            let d = decompose_rank6(&s).unwrap();
            assert!(verify_decomposition(&s, &d, 1e-12), "{s:?}");
        }
    }

    #[test]
    fn rank5_examples() {
        let s = real([1.0, 1.0, 1.0, 2.0], ONES, ONES);
        let d = decompose_rank5(&s).unwrap();
        assert_eq!(d.len(), 5);
        assert!(verify_decomposition(&s, &d, 1e-12));
        assert!(d.terms.iter().any(|t| t.vector.parallel_to(&ProductVector::basis(3), 1e-12)));

        let s = real([1.0, 1.0, 1.0, 2.0], [1.0, 1.0, 1.0, 2.0], ONES);
        let d = decompose_rank5(&s).unwrap();
        assert_eq!(d.len(), 6);
        assert!(verify_decomposition(&s, &d, 1e-12));

        assert!(matches!(
            decompose_rank5(&real(ONES, ONES, ONES)),
            Err(Error::WrongRank { found: 4, .. })
        ));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&real(ONES, ONES, [1.0, 1.0, 0.5, 0.5])).unwrap(), 6);
        assert_eq!(
            gamma(&real([1.0, 1.0, 2.0, 2.0], [1.0, 1.0, 2.0, 2.0], [1.0, 1.0, 0.5, 0.5])).unwrap(),
            8
        );
        assert_eq!(gamma(&real(ONES, ONES, ONES)).unwrap(), 4);
    }

    #[test]
    fn canonical_table_maps_to_first_pair() {
        for pair in PAIRS {
            let mut c = [0.5; 4];
            c[pair[0] - 1] = 1.0;
            c[pair[1] - 1] = 1.0;
            let s = real(ONES, ONES, c);
            let t = s.apply_ops(&canonical_ops(pair));
            assert_eq!(
                check_rank6_separability(&t).unwrap(),
                Rank6Check::Separable(Partition::from_pair([1, 2])),
                "{pair:?}"
            );
        }
    }

    #[test]
    fn extreme_points() {
        assert!(is_extreme_in_sx(&real(ONES, ONES, ONES)).unwrap());
        assert!(is_extreme_in_sx(&real([1.0, 0.0, 0.0, 0.0], [0.0; 4], [0.0; 4])).unwrap());
        assert!(!is_extreme_in_sx(&real(ONES, ONES, [1.0, 1.0, 0.5, 0.5])).unwrap());
    }
}
