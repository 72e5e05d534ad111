use thiserror::Error;

/// Failure categories shared by every operation in the crate.
///
/// The CLI maps `Usage` and `Input` to exit code 2 and `Invariant` to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operation was called outside its precondition.
    #[error("usage error: {0}")]
    Usage(String),
    /// Malformed instance or certificate data.
    #[error("input error: {0}")]
    Input(String),
    /// A solver-internal consistency check failed. Never caused by valid input.
    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! usage {
    ($($arg:tt)*) => { $crate::error::Error::Usage(format!($($arg)*)) };
}

macro_rules! invariant {
    ($($arg:tt)*) => { $crate::error::Error::Invariant(format!($($arg)*)) };
}

pub(crate) use invariant;
pub(crate) use usage;
