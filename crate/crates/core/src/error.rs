//! Crate-wide error type and the process exit codes derived from it.

use crate::detect::Witness;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract user input: bad DIMACS syntax,
    /// out-of-range vertex, self-loop, unusable flag combination.
    #[error("input error: {0}")]
    Input(String),

    /// The graph is not in the class an operation requires. Carries the
    /// induced-subgraph witness so the caller can re-check the verdict.
    #[error("graph is not {class}: induced {} on vertices {:?} (0-based)", witness.pattern.name(), witness.vertices)]
    ClassViolation { class: String, witness: Witness },

    /// An exhaustive oracle was asked for more vertices than it enumerates.
    #[error("oracle size cap exceeded: n = {n} but this oracle handles n <= {cap}")]
    SizeCap { n: usize, cap: usize },

    /// A "cannot happen" condition happened; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Exit code for a completed command with a positive verdict.
pub const EXIT_OK: i32 = 0;
/// Exit code when the input fails the checked class membership or a
/// submitted partition fails verification.
pub const EXIT_CLASS_VIOLATION: i32 = 1;
/// Exit code for malformed input, unusable flags, or oracle size caps.
pub const EXIT_INPUT_ERROR: i32 = 2;
/// Exit code for internal invariant violations (bugs).
pub const EXIT_INTERNAL: i32 = 3;

impl Error {
    /// Maps each error to the exit code contract of the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::SizeCap { .. } | Error::Io(_) => EXIT_INPUT_ERROR,
            Error::ClassViolation { .. } => EXIT_CLASS_VIOLATION,
            Error::Internal(_) => EXIT_INTERNAL,
        }
    }
}
