use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI.
///
/// The CLI exit-code contract is: `0` all checks pass, `1` a mathematical
/// violation or refusal, `2` an input or usage problem.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivideByZero,

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: i64, found: i64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },

    #[error("composition slot {slot} out of range for a map of degree {degree}")]
    SlotOutOfRange { slot: usize, degree: i64 },

    #[error("degree {degree} out of range (complex built up to degree {max})")]
    DegreeOutOfRange { degree: i64, max: usize },

    /// The square of the multiplication under total composition is nonzero;
    /// the witness is the first nonzero coefficient of that arity-3 map.
    #[error(
        "multiplication is not formally associative: \
         the associator maps basis triple ({i},{j},{l}) onto basis element {k} \
         with coefficient {value}"
    )]
    NotFormallyAssociative {
        i: usize,
        j: usize,
        l: usize,
        k: usize,
        value: String,
    },

    #[error("cochain is not a cocycle: its coboundary is nonzero")]
    NotACocycle,

    #[error("coboundary matrix would have {side} rows/columns, exceeding the cap {cap}")]
    MatrixTooLarge { side: usize, cap: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotFormallyAssociative { .. }
            | Error::NotACocycle
            | Error::InternalInconsistency(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
