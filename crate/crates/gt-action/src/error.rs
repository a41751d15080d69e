use gt_core::GtError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("generator E_{{{i},{j}}} out of range for n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("vector lives in V{got:?}, expected V{expected:?}")]
    WrongModule { expected: Vec<i64>, got: Vec<i64> },
    #[error(transparent)]
    Core(#[from] GtError),
}

impl ActionError {
    pub fn code(&self) -> &'static str {
        match self {
            ActionError::NotPrime(_) => "E_NOT_PRIME",
            ActionError::IndexOutOfRange { .. } => "E_INDEX",
            ActionError::WrongModule { .. } => "E_WRONG_MODULE",
            ActionError::Core(e) => e.code(),
        }
    }
}
