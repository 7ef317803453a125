use thiserror::Error;

/// Errors raised while building or sampling multilayer benchmarks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index out of bounds: {what} = {value}, bound {bound}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invalid {name}: {reason}")]
    Domain { name: &'static str, reason: String },

    /// Incoming copy mass into a layer (or state node) exceeds one.
    #[error("total copy probability {mass} into {location} exceeds 1")]
    CopyMass { location: String, mass: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("community {label} in layer {layer} has zero total expected degree")]
    DegenerateCommunity { label: usize, layer: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("could not sample a nonempty support for layer {layer} after {attempts} attempts")]
    EmptySupport { layer: usize, attempts: usize },

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("config error in `{field}`: {reason}")]
    Config { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            name,
            reason: reason.into(),
        }
    }

    /// True for errors caused by bad input rather than the environment.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Csv(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
