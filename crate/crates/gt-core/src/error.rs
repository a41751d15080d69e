use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("invalid weight {0:?}: entries must be non-increasing")]
    InvalidWeight(Vec<i64>),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{gamma:?} is not a rearrangement of {lambda:?}")]
    InvalidExtremal { lambda: Vec<i64>, gamma: Vec<i64> },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("{mu:?} does not interlace {lambda:?}")]
    NotInterlacing { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("label sets differ")]
    LabelMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

impl GtError {
    /// Stable machine-readable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            GtError::InvalidWeight(_) => "E_INVALID_WEIGHT",
            GtError::LengthMismatch { .. } => "E_LENGTH",
            GtError::InvalidExtremal { .. } => "E_INVALID_EXTREMAL",
            GtError::InvalidPattern(_) => "E_INVALID_PATTERN",
            GtError::NotInterlacing { .. } => "E_NOT_INTERLACING",
            GtError::LabelMismatch => "E_LABELS",
            GtError::Parse(_) => "E_PARSE",
        }
    }
}
