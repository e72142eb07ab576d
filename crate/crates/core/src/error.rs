use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix of {rows}x{cols} exceeds the supported 64x256")]
    DimensionLimit { rows: usize, cols: usize },

    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("unknown element label {0:?}")]
    UnknownLabel(String),

    #[error("cocircuit scan needs 2^{rank} codewords, over the limit 2^{limit}")]
    ScanLimitExceeded { rank: usize, limit: usize },

    #[error("matroid with {0} elements exceeds the canonical-form limit of 64")]
    SizeLimit(usize),

    #[error("search budget of {0} exhausted")]
    BudgetExceeded(u64),

    #[error("vector length {got} does not match {expected} columns")]
    LengthMismatch { expected: usize, got: usize },

    #[error("extension vector entry {0} is not in {{0,1,2}}")]
    BadVectorEntry(u8),

    #[error("matroid is not simple")]
    NotSimple,

    #[error("rank {rank} does not fit in PG({s},2)")]
    RankTooLarge { rank: usize, s: usize },

    #[error("unknown matroid name {0:?}")]
    UnknownName(String),

    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },

    #[error("invalid graph: {0}")]
    BadGraph(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("catalog configuration mismatch: {0}")]
    ConfigMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
