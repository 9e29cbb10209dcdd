use thiserror::Error;

use crate::algebra::EvalPoint;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the engine can report. [`Error::code`] gives the stable
/// `E_*` identifier used by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivZero,
    #[error("denominator vanishes at {0}")]
    Pole(EvalPoint),
    #[error("arc {arc} occurs {count} times (expected exactly 2)")]
    ArcCount { arc: u32, count: usize },
    #[error("rotation system is not planar; offending arcs {arcs:?}")]
    NotPlanar { arcs: Vec<u32> },
    #[error("component list does not match the diagram: {0}")]
    Components(String),
    #[error("{crossings} crossings exceed the state-sum cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },
    #[error("sweep frontier of {width} strands exceeds the cap of {cap}")]
    Width { width: usize, cap: usize },
    #[error("arity mismatch: expected {expected} boundary points, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("surgery linking matrix has signature {0}; only signature 0 is supported")]
    SigmaNonzero(i64),
    #[error("eta^{0} is irrational; exact mode needs an even power")]
    EtaOddPower(usize),
    #[error("color {color} outside the admissible range 0..={max}")]
    ColorRange { color: u32, max: u32 },
    #[error("argument lies on the branch cut of the principal logarithm")]
    BranchCut,
    #[error("independence certificate needs two distinct levels, got d = {0} twice")]
    SameD(u32),
    #[error("coefficient overflow during the tangle sweep")]
    Overflow,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivZero => "E_DIV_ZERO",
            Error::Pole(_) => "E_POLE",
            Error::ArcCount { .. } => "E_ARC_COUNT",
            Error::NotPlanar { .. } => "E_NOT_PLANAR",
            Error::Components(_) => "E_COMPONENTS",
            Error::TooLarge { .. } => "E_TOO_LARGE",
            Error::Width { .. } => "E_WIDTH",
            Error::Arity { .. } => "E_ARITY",
            Error::SigmaNonzero(_) => "E_SIGMA_NONZERO",
            Error::EtaOddPower(_) => "E_ETA_ODD_POWER",
            Error::ColorRange { .. } => "E_COLOR_RANGE",
            Error::BranchCut => "E_BRANCH_CUT",
            Error::SameD(_) => "E_SAME_D",
            Error::Overflow => "E_OVERFLOW",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::Parse(_) => "E_PARSE",
        }
    }
}
