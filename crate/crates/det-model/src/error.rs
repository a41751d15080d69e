use gt_core::GtError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetError {
    #[error("generator E_{{{i},{j}}} out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("exponent family is not admissible for the weight: {0}")]
    InvalidExponent(String),
    #[error("matrix must be {0}x{0}")]
    BadMatrix(usize),
    #[error("singular matrix")]
    Singular,
    #[error("vector does not lie in the module")]
    NotInModule,
    #[error(transparent)]
    Core(#[from] GtError),
}

impl DetError {
    pub fn code(&self) -> &'static str {
        match self {
            DetError::IndexOutOfRange { .. } => "E_INDEX",
            DetError::InvalidExponent(_) => "E_INVALID_EXPONENT",
            DetError::BadMatrix(_) => "E_MATRIX_SHAPE",
            DetError::Singular => "E_SINGULAR",
            DetError::NotInModule => "E_NOT_IN_MODULE",
            DetError::Core(e) => e.code(),
        }
    }
}
