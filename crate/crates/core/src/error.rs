use thiserror::Error;

use crate::ratcalc::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at g = {0}")]
    Pole(Rat),

    #[error("rational function denominator is identically zero")]
    ZeroDenominator,

    #[error("classes live on different surface models")]
    ModelMismatch,

    #[error("too many exceptional classes: {0} (limit {limit})", limit = crate::chow::MAX_EXCEPTIONAL)]
    TooManyBlowups(usize),

    #[error("index {index} out of range for {len} exceptional classes")]
    ExceptionalIndex { index: usize, len: usize },

    #[error("coefficient vector length {found} does not match model ({expected})")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unsupported rank {0}")]
    UnsupportedRank(u32),

    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: u32, found: u32 },

    #[error("invalid bundle data: {0}")]
    InvalidBundle(String),

    #[error("c1 of the bundle of conics must equal c1 of the reduced bundle")]
    C1Mismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("relative Euler characteristic vanishes")]
    ZeroChi,

    #[error("relative Euler characteristic is negative: {0}")]
    NegativeChi(String),

    #[error("unsupported exceptional family for degree {0}")]
    UnsupportedExceptional(u32),

    #[error("inconsistent scenario: {0}")]
    InconsistentScenario(String),

    #[error("derived bound depends on c1^2: {0}")]
    C1sqDependence(String),

    #[error("no admissible point on the c1^2 grid")]
    EmptyGrid,

    #[error("parse error: {0}")]
    Parse(String),
}
