use thiserror::Error;

/// Errors raised by state construction, the criteria and the decomposers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Diagonal entry below `-tol`. The index is 1-based; 1..=4 for `a`, 5..=8 for `b`.
    #[error("negative diagonal entry at position {0}")]
    NegativeDiagonal(usize),
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("non-finite entry in input")]
    NonFinite,
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("input is not a positive semidefinite state")]
    NotAState,
    #[error("phase difference undefined: anti-diagonal entry c{0} vanishes")]
    PhaseUndefined(usize),
    #[error("anti-diagonal entries do not share a common magnitude")]
    NotCommonMagnitude,
    #[error("rank-four conditions do not hold")]
    ConditionsFail,
    #[error("precondition failed: {0}")]
    PreconditionFail(&'static str),
    #[error("state is not separable")]
    NotSeparable,
    #[error("wrong rank: expected {expected}, found {found}")]
    WrongRank { expected: &'static str, found: usize },
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("invalid random profile: {0}")]
    InvalidProfile(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
