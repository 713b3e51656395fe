use thiserror::Error;

/// Errors produced by discretization, I/O and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("series `{id}` is empty")]
    EmptySeries { id: String },

    #[error("series `{id}` has a non-finite value at position {index}")]
    NonFiniteValue { id: String, index: usize },

    #[error("degenerate series: all values identical, no breakpoint candidate exists")]
    DegenerateSeries,

    #[error("bin count must be at least 2, got {0}")]
    InvalidBins(usize),

    #[error("alphabet size must be in 2..=26, got {0}")]
    InvalidAlphabet(usize),

    #[error("{path}: line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: file contains no series")]
    EmptyFile { path: String },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("line {line}: invalid event sequence: {message}")]
    InvalidEvents { line: usize, message: String },

    #[error("series `{id}` has no class label")]
    MissingLabel { id: String },

    #[error("training set must contain at least 2 classes, got {0}")]
    TooFewClasses(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
