use thiserror::Error;

/// Failures surfaced by the harness, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{0}")]
    Usage(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Engine(#[from] toom_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("need at least {needed} rows of one configuration, found {found}")]
    InsufficientRows { needed: usize, found: usize },
}

impl BenchError {
    /// 0 success, 1 usage or I/O, 2 verification failure, 3 internal
    /// arithmetic error such as an inexact division.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Verification(_) => 2,
            BenchError::Engine(
                toom_core::Error::Parse(_)
                | toom_core::Error::InvalidPlan(_)
                | toom_core::Error::InvalidBlocks(_),
            ) => 1,
            BenchError::Engine(_) => 3,
            BenchError::Usage(_)
            | BenchError::Io(_)
            | BenchError::Csv(_)
            | BenchError::InsufficientRows { .. } => 1,
        }
    }
}

pub type Result<T, E = BenchError> = std::result::Result<T, E>;
