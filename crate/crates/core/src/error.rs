use thiserror::Error;

/// Library-wide error type.
///
/// The two "loud" variants matter for exit-code mapping in the CLI:
/// [`Error::Integrality`] signals an internal defect (a quantity that the
/// theory guarantees to be a nonnegative integer came out otherwise), while
/// [`Error::ExpectationMismatch`] signals a fixture whose stored expected
/// values disagree with what was computed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("catalog validation failed: {0}")]
    Catalog(String),

    #[error("invalid fixture {label}: {message}")]
    Fixture { label: String, message: String },

    #[error("integrality defect in {context}: {message}")]
    Integrality { context: String, message: String },

    #[error("expectation mismatch for {label}: {field}: expected {expected}, computed {computed}")]
    ExpectationMismatch {
        label: String,
        field: String,
        expected: String,
        computed: String,
    },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn integrality(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Integrality {
            context: context.into(),
            message: message.into(),
        }
    }

    /// Process exit code the CLI should use for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ExpectationMismatch { .. } => 2,
            Error::Integrality { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
