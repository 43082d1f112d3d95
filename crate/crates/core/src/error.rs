//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A tensor or layer was fed data of the wrong dimensions.
    #[error("shape mismatch at layer {layer}: expected input width {expected}, got {actual}")]
    ShapeMismatch {
        layer: usize,
        expected: usize,
        actual: usize,
    },

    #[error("tensor shape {shape:?} implies {expected} elements, got {actual}")]
    BadTensor {
        shape: Vec<usize>,
        expected: usize,
        actual: usize,
    },

    #[error("non-finite value produced in {context}")]
    NonFinite { context: String },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("dataset row {row}: target {target} is outside [0, {classes})")]
    BadTarget {
        row: usize,
        target: usize,
        classes: usize,
    },

    #[error("parameter vector length {actual} does not match model parameter count {expected}")]
    ParamLength { expected: usize, actual: usize },

    #[error("training diverged: loss is not finite at epoch {epoch}")]
    Diverged { epoch: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("csv parse error at line {line}: {reason}")]
    CsvParse { line: usize, reason: String },

    #[error("empty accuracy distribution")]
    EmptyDistribution,

    #[error("percentile k must satisfy 0 < k <= 100, got {0}")]
    BadPercentile(f64),

    #[error(
        "corner oracle supports at most {limit} parameters, model has {actual}; use the \
         projected-gradient attack instead"
    )]
    CornerGuard { limit: usize, actual: usize },

    #[error("all {0} attack restarts aborted on non-finite gradients")]
    AllRestartsFailed(usize),

    #[error(
        "truncation bound {bound} is too tight relative to sigma {sigma}: rejection sampling \
         exceeded the retry cap"
    )]
    TruncationTooTight { sigma: f64, bound: f64 },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
