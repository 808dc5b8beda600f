//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised anywhere in the kit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator x{index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: u64, rank: usize },

    #[error("exponent overflow while merging x{gen}")]
    ExponentOverflow { gen: u32 },

    #[error("resource cap exceeded: {what} needs {needed}, limit is {limit}")]
    ResourceCap {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("context mismatch: F({}, {}) vs F({}, {})", .left.0, .left.1, .right.0, .right.1)]
    ContextMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("not an automorphism: abelianization has determinant {det}")]
    NotAnAutomorphism { det: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::GeneratorOutOfRange { .. }
            | Error::ExponentOverflow { .. }
            | Error::InvalidArgument(_) => 2,
            Error::ResourceCap { .. } => 3,
            Error::ContextMismatch { .. } | Error::NotAnAutomorphism { .. } | Error::Precondition(_) => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
