//! Script errors and failure classification.

use thiserror::Error;

/// A script that failed to parse or name-check.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// How a failed command is classified for the exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    AssertionFailed,
    Unsupported,
    InputError,
}

impl FailureKind {
    pub fn of(err: &noether::Error) -> FailureKind {
        if err.is_unsupported() { FailureKind::Unsupported } else { FailureKind::InputError }
    }

    pub fn name(self) -> &'static str {
        match self {
            FailureKind::AssertionFailed => "assertion-failed",
            FailureKind::Unsupported => "unsupported",
            FailureKind::InputError => "input-error",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            FailureKind::AssertionFailed => 1,
            FailureKind::InputError => 2,
            FailureKind::Unsupported => 3,
        }
    }

    /// Input errors outrank unsupported computations, which outrank failed
    /// assertions.
    fn severity(self) -> u8 {
        match self {
            FailureKind::AssertionFailed => 1,
            FailureKind::Unsupported => 2,
            FailureKind::InputError => 3,
        }
    }

    pub fn worst(kinds: impl IntoIterator<Item = FailureKind>) -> Option<FailureKind> {
        kinds.into_iter().max_by_key(|k| k.severity())
    }
}
