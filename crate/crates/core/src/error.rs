use thiserror::Error;

/// Every failure the verification engine can report.
///
/// Scalar values are carried as their `p/q` rendering so the error type stays
/// independent of the scalar parameter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole of {func}({x}, {y})")]
    Pole {
        func: &'static str,
        x: String,
        y: String,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("coupling constant must be nonzero")]
    ZeroCoupling,

    #[error("duplicate value {0} in variable set")]
    Duplicate(String),

    #[error("split sizes {sizes:?} do not add up to set size {len}")]
    SizeMismatch { sizes: Vec<usize>, len: usize },

    #[error("{what}: {index} out of range 0..{bound}")]
    Range {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("{label} does not hold: {detail}")]
    CheckFailure { label: String, detail: String },

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("no admissible parameters after {0} rejections")]
    Exhaustion(usize),

    #[error("T_{i}{j} has the wrong parity for {context}")]
    Parity {
        i: usize,
        j: usize,
        context: &'static str,
    },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn pole(func: &'static str, x: impl ToString, y: impl ToString) -> Self {
        Error::Pole {
            func,
            x: x.to_string(),
            y: y.to_string(),
        }
    }

    pub(crate) fn check(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::CheckFailure {
            label: label.into(),
            detail: detail.into(),
        }
    }
}
