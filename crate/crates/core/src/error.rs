use thiserror::Error;

/// Errors raised by every layer of the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by a non-invertible element")]
    DivisionByNonInvertible,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not antisymmetric")]
    NotAntisymmetric,
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("element is not a square")]
    NotASquare,
    #[error("quartic invariant vanishes")]
    ZeroQuartic,
    #[error("quartic invariant is not in the requested square class")]
    WrongSquareClass,
    #[error("operation requires the {0} construction")]
    WrongConstruction(String),
    #[error("invalid complex structure: {0}")]
    InvalidJ(String),
    #[error("calibration failed: {0}")]
    CalibrationFailure(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("scalar is not invertible")]
    NonInvertibleScalar,
    #[error("algebra is not Heisenberg graded: {0}")]
    NotHeisenbergGraded(String),
    #[error("independent checks disagree: {0}")]
    Disagreement(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True when the error reports a broken mathematical invariant rather than bad input.
    pub fn is_invariant_failure(&self) -> bool {
        matches!(
            self,
            Error::Invariant(_) | Error::Disagreement(_) | Error::CalibrationFailure(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
