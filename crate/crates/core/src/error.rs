use thiserror::Error;

/// Errors raised by the algebra, the predicates and the text parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a composition needs at least one part")]
    EmptyComposition,

    #[error("part {index} is {value}; composition parts must be positive")]
    NonPositivePart { index: usize, value: u32 },

    #[error("cannot pad a sequence of length {have} to length {want}")]
    PadTooShort { have: usize, want: usize },

    #[error("length mismatch: alpha has {alpha} parts, beta has {beta}")]
    LengthMismatch { alpha: usize, beta: usize },

    #[error("{0} is not a partition (parts must weakly decrease)")]
    NotAPartition(String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },

    #[error("matrix dimension {dim} exceeds the exact-expansion cap of {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("integer coefficient overflow while accumulating an expansion")]
    CoefficientOverflow,

    #[error("matrix rows must all have length {expected}, found {found}")]
    RaggedMatrix { expected: usize, found: usize },

    #[error("selection is not a permutation of 1..={0}")]
    BadSelection(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial is not symmetric: leading exponent {0} is not weakly decreasing")]
    NotSymmetric(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
