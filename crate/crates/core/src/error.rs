use thiserror::Error;

/// Errors surfaced by the exact-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("module dimension must be positive")]
    ZeroDim,

    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),

    #[error("coefficient vector has length {got}, expected {want} = dim^(degree+1)")]
    CoeffLength { got: usize, want: usize },

    #[error("composition slot {index} out of range 0..={max} for a degree-{degree} operation")]
    CompositionRange {
        index: usize,
        max: i64,
        degree: usize,
    },

    #[error("degree-0 operation has no composition slots")]
    NoSlots,

    #[error("binary (degree-2) operation required, got degree {0}")]
    NotBinary(usize),

    #[error("degree-{want} operation required, got degree {got}")]
    DegreeMismatch { want: usize, got: usize },

    #[error("operation degree must be at least {min}, got {got}")]
    DegreeTooLow { min: usize, got: usize },

    #[error("total composition is undefined for a degree-0 left factor")]
    EmptyFlow,

    #[error("flow target degree would be negative")]
    NegativeDegree,

    #[error("expected {want} arguments, got {got}")]
    Arity { want: usize, got: usize },

    #[error("argument vector has length {got}, expected {want}")]
    VectorLength { got: usize, want: usize },

    #[error("operation is not associative; nonzero associator entries: {}", entries.join(", "))]
    NotAssociative { entries: Vec<String> },

    #[error("degree-1 generator is not a cocycle of the given operation")]
    NotCocycle,

    #[error("matrix with {entries} entries exceeds the resource cap of {cap}")]
    ResourceCap { entries: usize, cap: usize },

    #[error("tensor of dimension {dim} and degree {degree} is too large to represent")]
    SizeOverflow { dim: usize, degree: usize },

    #[error("coefficient bound must be at least 1")]
    ZeroBound,

    #[error("invalid rational literal {0:?}")]
    ParseScalar(String),

    #[error("invalid dynamics configuration: {0}")]
    BadConfig(&'static str),
}
