//! Separability criteria and the top-level classifier.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;
use std::fmt;

use crate::decompose::{
    check_rank6_separability, decompose_common_magnitude, decompose_eps_mixture, decompose_rank4,
    decompose_rank5, decompose_rank6, optimal_decompose_rank6, phase_bound, Rank6Check,
};
use crate::error::{Error, Result};
use crate::oracle::{max_on_circle, verify_decomposition, DEFAULT_GRID};
use crate::product::{decompose_diagonal, WeightedDecomposition};
use crate::state::{approx_ge, System, XState};

/// Outcome of one inequality `rhs ≥ lhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
}

impl CriterionResult {
    fn new(lhs: f64, rhs: f64, tol: f64) -> Self {
        CriterionResult { pass: approx_ge(rhs, lhs, tol), lhs, rhs }
    }
}

fn require_state(s: &XState) -> Result<()> {
    if s.is_positive() {
        Ok(())
    } else {
        Err(Error::NotAState)
    }
}

/// Signature shared by the inequality tests.
pub type CriterionFn = fn(&XState) -> Result<CriterionResult>;

/// `Δ ≥ R`.
pub fn criterion_diag(s: &XState) -> Result<CriterionResult> {
    require_state(s)?;
    Ok(CriterionResult::new(s.big_r(), s.delta(), s.tol()))
}

/// `Δ ≥ r·√(1 + |sin φ/2|)`, vacuous when `r = 0`.
pub fn criterion_phase(s: &XState) -> Result<CriterionResult> {
    require_state(s)?;
    let lhs = match s.sin_half_phase() {
        Some(sh) if s.small_r() > s.tol() => s.small_r() * (1.0 + sh).sqrt(),
        _ => 0.0,
    };
    Ok(CriterionResult::new(lhs, s.delta(), s.tol()))
}

fn a_rho_objective(c: [Complex64; 4]) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        let e = Complex64::from_polar(1.0, t);
        (c[0] * e + c[1]).norm() + (c[2] * e - c[3]).norm()
    }
}

/// `A_ρ = max_θ (|c₁e^{iθ} + c₂| + |c₃e^{iθ} − c₄|) / (2√2)`.
pub fn a_rho(s: &XState) -> f64 {
    max_on_circle(a_rho_objective(s.c()), DEFAULT_GRID).value / (2.0 * SQRT_2)
}

/// `Δ ≥ A_ρ`.
pub fn criterion_a(s: &XState) -> Result<CriterionResult> {
    require_state(s)?;
    Ok(CriterionResult::new(a_rho(s), s.delta(), s.tol()))
}

/// Evaluated witness inequality at one `z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WitnessEval {
    pub z: [Complex64; 4],
    pub lhs: f64,
    pub rhs: f64,
    pub tau_star: f64,
    pub violation: bool,
}

/// `|Re(z₁c₁ + z₂c₂ + z₃c₃ + z₄c̄₄)|` against `Δ·max_τ(|z₁e^{iτ} + z₄| + |z₂e^{iτ} + z̄₃|)`.
pub fn evaluate_witness(s: &XState, z: [Complex64; 4]) -> WitnessEval {
    let c = s.c();
    let lhs = (z[0] * c[0] + z[1] * c[1] + z[2] * c[2] + z[3] * c[3].conj()).re.abs();
    let best = max_on_circle(
        |tau| {
            let e = Complex64::from_polar(1.0, tau);
            (z[0] * e + z[3]).norm() + (z[1] * e + z[2].conj()).norm()
        },
        DEFAULT_GRID,
    );
    let rhs = s.delta() * best.value;
    WitnessEval { z, lhs, rhs, tau_star: best.arg, violation: !approx_ge(rhs, lhs, s.tol()) }
}

/// The witness vector that turns the witness inequality into `Δ ≥ A_ρ`.
pub fn optimal_witness(s: &XState) -> [Complex64; 4] {
    let c = s.c();
    let theta = max_on_circle(a_rho_objective(c), DEFAULT_GRID).arg;
    let e = Complex64::from_polar(1.0, theta);
    let phi = -(c[0] * e + c[1]).arg();
    let psi = -(c[2] * e - c[3]).arg();
    [
        Complex64::from_polar(1.0, theta + phi),
        Complex64::from_polar(1.0, phi),
        Complex64::from_polar(1.0, theta + psi),
        -Complex64::from_polar(1.0, -psi),
    ]
}

/// `Δ ≥ R·√(1 + max(|sin φ/2|, |cos φ/2|))`; the factor is `√2` when `φ` is undefined.
pub fn criterion_sufficient_eps(s: &XState) -> Result<CriterionResult> {
    require_state(s)?;
    let factor = match s.phase_difference() {
        Some(phi) => 1.0 + (phi / 2.0).sin().abs().max((phi / 2.0).cos().abs()),
        None => 2.0,
    };
    Ok(CriterionResult::new(s.big_r() * factor.sqrt(), s.delta(), s.tol()))
}

#[derive(Debug, Clone, PartialEq)]
pub enum CommonMagnitudeDecision {
    Separable(WeightedDecomposition),
    Entangled(CriterionResult),
}

/// Exact decision when every `|c_i|` equals `R`.
pub fn decide_common_magnitude(s: &XState) -> Result<CommonMagnitudeDecision> {
    require_state(s)?;
    if !s.has_common_magnitude() {
        return Err(Error::NotCommonMagnitude);
    }
    let test = CriterionResult::new(phase_bound(s), s.delta(), s.tol());
    if !test.pass {
        return Ok(CommonMagnitudeDecision::Entangled(test));
    }
    Ok(CommonMagnitudeDecision::Separable(decompose_common_magnitude(s)?))
}

/// Inequality that proved PPT entanglement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    Diag,
    Phase,
    ARho,
    Rank6,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Diag => "diag",
            Criterion::Phase => "phase",
            Criterion::ARho => "a_rho",
            Criterion::Rank6 => "rank6",
        }
    }
}

/// Branch that produced a separable verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Route {
    Diagonal,
    Rank4,
    Rank5,
    Rank6,
    CommonMagnitude,
    EpsMixture,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Diagonal => "diagonal",
            Route::Rank4 => "rank4",
            Route::Rank5 => "rank5",
            Route::Rank6 => "rank6",
            Route::CommonMagnitude => "common_magnitude",
            Route::EpsMixture => "eps_mixture",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    NotAState,
    /// A partial transpose has a negative block: `lhs = |c|²` exceeds `rhs = a_i b_i`.
    NptEntangled { system: System, lhs: f64, rhs: f64 },
    PptEntangled { criterion: Criterion, lhs: f64, rhs: f64 },
    Separable { route: Route, certificate: Option<WeightedDecomposition> },
    Inconclusive,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::NotAState => "NotAState",
            Verdict::NptEntangled { .. } => "NptEntangled",
            Verdict::PptEntangled { .. } => "PptEntangled",
            Verdict::Separable { .. } => "Separable",
            Verdict::Inconclusive => "Inconclusive",
        }
    }

    pub fn is_separable(&self) -> bool {
        matches!(self, Verdict::Separable { .. })
    }

    pub fn is_entangled(&self) -> bool {
        matches!(self, Verdict::NptEntangled { .. } | Verdict::PptEntangled { .. })
    }

    pub fn certificate(&self) -> Option<&WeightedDecomposition> {
        match self {
            Verdict::Separable { certificate, .. } => certificate.as_ref(),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NptEntangled { system, .. } => write!(f, "NptEntangled({system})"),
            Verdict::PptEntangled { criterion, .. } => write!(f, "PptEntangled({})", criterion.name()),
            Verdict::Separable { route, .. } => write!(f, "Separable({})", route.name()),
            other => f.write_str(other.tag()),
        }
    }
}

fn npt_evidence(s: &XState) -> Option<(System, f64, f64)> {
    let (a, b) = (s.a(), s.b());
    for sys in System::ALL {
        let pt = s.partial_transpose(sys);
        if pt.is_positive() {
            continue;
        }
        let c = pt.c();
        let i = (0..4)
            .max_by(|&i, &j| {
                let gi = c[i].norm_sqr() - a[i] * b[i];
                let gj = c[j].norm_sqr() - a[j] * b[j];
                gi.total_cmp(&gj)
            })
            .unwrap_or(0);
        return Some((sys, c[i].norm_sqr(), a[i] * b[i]));
    }
    None
}

fn checked(s: &XState, d: Result<WeightedDecomposition>) -> Option<WeightedDecomposition> {
    d.ok().filter(|d| verify_decomposition(s, d, s.tol()))
}

fn low_rank_certificate(s: &XState, rank: usize) -> (Route, Option<WeightedDecomposition>) {
    let primary = match rank {
        4 => (Route::Rank4, checked(s, decompose_rank4(s))),
        5 => (Route::Rank5, checked(s, decompose_rank5(s))),
        6 => (Route::Rank6, checked(s, optimal_decompose_rank6(s).map(|(d, _)| d))),
        _ => (Route::Rank6, None),
    };
    match primary {
        (route, Some(d)) => (route, Some(d)),
        (route, None) => (route, checked(s, decompose_rank6(s))),
    }
}

/// Ordered pipeline: positivity, PPT, exact low-rank test, diagonal, common magnitude,
/// necessary inequalities, sufficient inequality, otherwise inconclusive.
pub fn classify(s: &XState) -> Verdict {
    if !s.is_positive() {
        return Verdict::NotAState;
    }
    if let Some((system, lhs, rhs)) = npt_evidence(s) {
        return Verdict::NptEntangled { system, lhs, rhs };
    }
    let rank = s.block_ranks().iter().sum::<usize>();
    if rank <= 6 && !s.is_diagonal() {
        match check_rank6_separability(s) {
            Ok(Rank6Check::Separable(_)) => {
                let (route, certificate) = low_rank_certificate(s, rank);
                return Verdict::Separable { route, certificate };
            }
            Ok(Rank6Check::Entangled { lhs, rhs, .. }) => {
                return Verdict::PptEntangled { criterion: Criterion::Rank6, lhs, rhs };
            }
            Err(_) => {}
        }
    }
    if s.is_diagonal() {
        return Verdict::Separable { route: Route::Diagonal, certificate: decompose_diagonal(s).ok() };
    }
    if s.has_common_magnitude() {
        match decide_common_magnitude(s) {
            Ok(CommonMagnitudeDecision::Separable(d)) => {
                let certificate = Some(d).filter(|d| verify_decomposition(s, d, s.tol()));
                return Verdict::Separable { route: Route::CommonMagnitude, certificate };
            }
            Ok(CommonMagnitudeDecision::Entangled(r)) => {
                return Verdict::PptEntangled { criterion: Criterion::Phase, lhs: r.lhs, rhs: r.rhs };
            }
            Err(_) => {}
        }
    }
    let necessary: [(Criterion, CriterionFn); 3] = [
        (Criterion::Diag, criterion_diag),
        (Criterion::Phase, criterion_phase),
        (Criterion::ARho, criterion_a),
    ];
    for (criterion, test) in necessary {
        if let Ok(r) = test(s) {
            if !r.pass {
                return Verdict::PptEntangled { criterion, lhs: r.lhs, rhs: r.rhs };
            }
        }
    }
    if matches!(criterion_sufficient_eps(s), Ok(r) if r.pass) {
        if let Some(d) = checked(s, decompose_eps_mixture(s)) {
            return Verdict::Separable { route: Route::EpsMixture, certificate: Some(d) };
        }
    }
    Verdict::Inconclusive
}
