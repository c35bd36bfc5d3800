use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("incompatible fields: {0} and {1}")]
    IncompatibleFields(String, String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("bad coefficient at offset {pos}: {msg}")]
    BadCoefficient { pos: usize, msg: String },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {arity} variables")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("exponent must be nonnegative, got {0}")]
    NegativeExponent(i64),
    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturator,
    #[error("dual space still growing at truncation order {bound}: ideal is not primary to the point")]
    NotZeroDimensionalAtPoint { bound: usize },
    #[error("unsupported characteristic {characteristic}: {reason}")]
    UnsupportedCharacteristic { characteristic: u64, reason: String },
    #[error("generator {0} does not vanish at the point")]
    PointNotOnVariety(String),
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("inconsistent extension: {0}")]
    InconsistentExtension(String),
    #[error("symbolic power of a general prime requires a witness")]
    MissingWitness,
    #[error("invalid prime data: {0}")]
    InvalidPrime(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported computation: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for errors that signal a computation outside the supported
    /// range (as opposed to malformed input).
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedCharacteristic { .. }
                | Error::NotZeroDimensionalAtPoint { .. }
                | Error::InconsistentExtension(_)
                | Error::Unsupported(_)
        )
    }

    /// Byte offset carried by parse errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Syntax { pos, .. }
            | Error::UnknownVariable { pos, .. }
            | Error::BadCoefficient { pos, .. } => Some(*pos),
            _ => None,
        }
    }

    /// Shift the offset of a parse error by `delta` bytes.
    pub fn offset_by(self, delta: usize) -> Error {
        match self {
            Error::Syntax { pos, msg } => Error::Syntax { pos: pos + delta, msg },
            Error::UnknownVariable { name, pos } => Error::UnknownVariable { name, pos: pos + delta },
            Error::BadCoefficient { pos, msg } => Error::BadCoefficient { pos: pos + delta, msg },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
