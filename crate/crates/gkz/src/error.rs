use gkz_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_INDEFINITE: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::LimitExceeded { .. }) | CliError::Core(Error::OrderExceedsBound { .. }) => EXIT_LIMIT,
            CliError::Io(_) => EXIT_FAILED,
            _ => EXIT_INVALID,
        }
    }
}
