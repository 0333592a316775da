use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("scaling factor must be positive")]
    NonPositiveScale,

    #[error("multipliers must be nonnegative")]
    NegativeMultiplier,

    #[error("nonnegative data required: {0}")]
    NegativeData(String),

    #[error("enumeration cap exceeded: needed {needed}, cap {cap}")]
    CapExceeded { needed: u64, cap: u64 },

    #[error("instance is not well-behaved")]
    NotWellBehaved,

    #[error("integer hull undefined: recession cone is not generated by unit vectors")]
    NonAxisRecession,

    #[error("expected exactly two structural rows, found {0}")]
    WrongRowCount(usize),

    #[error("invalid parameter: {0}")]
    BadParam(String),

    #[error("parse error: {0}")]
    Parse(String),
}
