use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// A caller-supplied parameter is out of range or malformed.
    #[error("invalid {field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("empty point set")]
    EmptyInput,

    #[error("frame rows are not orthonormal (max deviation {0:e})")]
    NonOrthonormalFrame(f64),

    #[error("degenerate hull: {0}")]
    DegenerateHull(String),

    #[error("origin is not interior to the hull (smallest facet offset {0:e})")]
    OriginNotInterior(f64),

    #[error("mixed volume {value:e} is negative beyond tolerance {tolerance:e}")]
    NegativeMixedVolume { value: f64, tolerance: f64 },

    #[error("quermass bracket inverted: lower {lower:e} > upper {upper:e}")]
    BracketInverted { lower: f64, upper: f64 },

    /// A single Monte Carlo sample failed; `frame` holds the rows of the
    /// orthogonal sample so the draw can be replayed.
    #[error("sample {index} failed: {source}")]
    SampleFailed {
        index: u64,
        frame: Vec<Vec<f64>>,
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    /// True for errors caused by bad input rather than a kernel failure.
    pub fn is_validation(&self) -> bool {
        match self {
            Error::InvalidParameter { .. }
            | Error::DimensionMismatch { .. }
            | Error::EmptyInput
            | Error::NonOrthonormalFrame(_) => true,
            Error::SampleFailed { source, .. } => source.is_validation(),
            _ => false,
        }
    }
}
