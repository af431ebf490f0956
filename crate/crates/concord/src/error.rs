use thiserror::Error;

/// A malformed ordering line. Columns are 1-based character offsets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: empty ordering")]
    EmptyLine { line: usize },
    #[error("line {line}, column {column}: duplicate symbol '{symbol}'")]
    DuplicateSymbol {
        symbol: String,
        line: usize,
        column: usize,
    },
    #[error("line {line}, column {column}: empty bucket")]
    EmptyBucket { line: usize, column: usize },
    #[error("line {line}, column {column}: unbalanced brace")]
    UnbalancedBrace { line: usize, column: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("no orderings given")]
    EmptySet,
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("need at least two judges, got {0}")]
    TooFewJudges(usize),
    #[error("f(n, k) requires 1 <= k <= n, got n = {n}, k = {k}")]
    InvalidLength { n: usize, k: usize },
    #[error("enumeration exceeded the cap of {cap} sequences")]
    CapExceeded { cap: usize },
    #[error("ordering of length {len} exceeds the brute-force bound of {max}")]
    OracleBound { len: usize, max: usize },
    #[error("covering-set construction made no progress at symbol '{0}'")]
    NoProgress(String),
}

pub type Result<T> = std::result::Result<T, Error>;
