use crate::scoring::Metric;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("zero-norm vector: {0}")]
    ZeroNorm(String),

    #[error("duplicate class id `{0}`")]
    DuplicateClass(String),

    #[error("unknown class id `{0}`")]
    UnknownClass(String),

    #[error("coefficient length {got} does not match dictionary column count {expected}")]
    CodeLengthMismatch { expected: usize, got: usize },

    #[error("expected a {expected:?} score, got {got:?}")]
    MetricMismatch { expected: Metric, got: Metric },

    /// The SCR ratio is 0/0 when the sparse code is identically zero. This is
    /// signalled distinctly so callers can count it instead of silently
    /// contaminating score distributions.
    #[error("sparse code is all zeros; contribution ratio is undefined")]
    UndefinedScore,

    #[error("support enumeration too large: C({m},{k}) exceeds {limit}")]
    EnumerationGuard { m: usize, k: usize, limit: u64 },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("malformed image: {0}")]
    MalformedImage(String),

    #[error("malformed feature file: {0}")]
    MalformedFeatureFile(String),

    #[error("dictionaries do not cover the same class set")]
    ClassSetMismatch,

    #[error("solver failed on {modality} modality: {source}")]
    ModalitySolve {
        modality: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
