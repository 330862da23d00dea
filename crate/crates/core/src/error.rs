use thiserror::Error;

pub type Result<T> = std::result::Result<T, CensusError>;

/// Every failure the engine can report. Usage-type failures and resource
/// failures are distinguished so the CLI can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("invalid genus {genus}: must be at least {min}")]
    InvalidGenus { genus: i64, min: i64 },

    #[error("invalid separating type h={0}: must be at least 1")]
    InvalidSeparatingType(i64),

    #[error("fiber-type vector for genus {genus} needs {expected} separating counts, got {got}")]
    VectorShape {
        genus: i64,
        expected: usize,
        got: usize,
    },

    #[error("negative count {value} in fiber-type vector")]
    NegativeCount { value: i64 },

    #[error("trivial fibration: at least one vanishing cycle is required")]
    TrivialFibration,

    #[error("signature of {vector} is not an integer: {numerator}/{denominator}")]
    SignatureNotIntegral {
        vector: String,
        numerator: i64,
        denominator: i64,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid enumeration query: {0}")]
    InvalidQuery(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unsupported base genus {0}: the degree argument needs base genus at least 2")]
    UnsupportedBase(i64),

    #[error("degree {degree} outside the admissible range 1..={bound}")]
    DegreeOutOfRange { degree: i64, bound: i64 },

    #[error("parse error at token {token} (byte offset {offset}): unknown token {text:?}")]
    Parse {
        token: usize,
        offset: usize,
        text: String,
    },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        source: Box<CensusError>,
    },

    #[error("separating type S{h} at token {token} (byte offset {offset}) out of range: genus {genus} allows 1..={max}")]
    SeparatingTypeOutOfRange {
        h: i64,
        max: i64,
        genus: i64,
        token: usize,
        offset: usize,
    },
}

impl CensusError {
    /// True for failures caused by size limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        match self {
            CensusError::Overflow(_) | CensusError::Resource(_) => true,
            CensusError::AtLine { source, .. } => source.is_resource(),
            _ => false,
        }
    }
}
