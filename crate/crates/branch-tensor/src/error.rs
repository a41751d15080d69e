use gt_core::GtError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchError {
    #[error("{mu:?} does not interlace {lambda:?}")]
    NotInterlacing { lambda: Vec<i64>, mu: Vec<i64> },
    #[error("vector lives in V{got:?}, expected V{expected:?}")]
    WrongModule { expected: Vec<i64>, got: Vec<i64> },
    #[error("weights {0:?} and {1:?} have different lengths")]
    RankMismatch(Vec<i64>, Vec<i64>),
    #[error(transparent)]
    Core(#[from] GtError),
    #[error(transparent)]
    Action(#[from] gt_action::ActionError),
    #[error(transparent)]
    Det(#[from] det_model::DetError),
}

impl BranchError {
    pub fn code(&self) -> &'static str {
        match self {
            BranchError::NotInterlacing { .. } => "E_INTERLACE",
            BranchError::WrongModule { .. } => "E_WRONG_MODULE",
            BranchError::RankMismatch(..) => "E_RANK",
            BranchError::Core(e) => e.code(),
            BranchError::Action(e) => e.code(),
            BranchError::Det(e) => e.code(),
        }
    }
}
