use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bad input line {line}: {message}")]
    Input { line: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("{message}")]
    Domain { code: &'static str, message: String },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "E_USAGE",
            CliError::Input { .. } => "E_INPUT",
            CliError::Io(_) => "E_IO",
            CliError::Domain { code, .. } => code,
        }
    }

    /// 1 for an internal verification failure, 2 for anything the caller got wrong.
    pub fn exit_code(&self) -> i32 {
        if self.code() == "E_INTERNAL" {
            1
        } else {
            2
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code(), "message": self.to_string() } })
    }
}

macro_rules! domain {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain { code: e.code(), message: e.to_string() }
            }
        }
    )*};
}

domain!(
    gt_core::GtError,
    gt_action::ActionError,
    branch_tensor::BranchError,
    pairings::PairingError,
    det_model::DetError,
    arch_constants::ArchError
);
