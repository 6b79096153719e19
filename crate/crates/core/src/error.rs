use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={len}")]
    OutOfRange { index: usize, len: usize },

    #[error("position {index} out of range 0..={len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("symbol {symbol} outside alphabet of size {sigma}")]
    BadSymbol { symbol: u64, sigma: u64 },

    #[error("occurrence {rank} of {symbol} not found ({count} present)")]
    NotFound { symbol: u64, rank: usize, count: usize },

    #[error("empty or inverted range [{start}, {end}]")]
    EmptyRange { start: usize, end: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("interval {index} has left endpoint {left} after right endpoint {right}")]
    InvertedInterval { index: usize, left: f64, right: f64 },

    #[error("coordinate at interval {index} is not finite")]
    NonFinite { index: usize },

    #[error("invalid realization: {0}")]
    InvalidRealization(String),

    #[error("not a proper realization: interval {outer} contains interval {inner}")]
    NotProper { outer: usize, inner: usize },

    #[error("arc {index} covers the entire circle")]
    FullCircle { index: usize },

    #[error("duplicate endpoint coordinate {coordinate}")]
    DuplicateEndpoint { coordinate: f64 },

    #[error("anchor index {index} out of range for {len} arcs")]
    BadAnchor { index: usize, len: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed binary data: {0}")]
    Format(String),

    #[error("oracle limit exceeded: {what} supports n <= {limit}, got {n}")]
    OracleLimit {
        what: &'static str,
        limit: usize,
        n: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
