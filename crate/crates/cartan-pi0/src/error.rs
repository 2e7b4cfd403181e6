use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const DEFECT: i32 = 3;
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("internal defect: {0}")]
    Defect(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => exit::USAGE,
            AppError::Parse(_) | AppError::Invalid(_) => exit::VALIDATION,
            AppError::Defect(_) => exit::DEFECT,
        }
    }
}

impl From<cartan_pi0_core::Error> for AppError {
    fn from(e: cartan_pi0_core::Error) -> Self {
        match e {
            cartan_pi0_core::Error::Defect(s) => AppError::Defect(s),
            other => AppError::Invalid(other.to_string()),
        }
    }
}
