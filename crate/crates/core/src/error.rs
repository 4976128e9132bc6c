use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {id} has a non-finite coordinate")]
    NonFinite { id: usize },

    #[error("point at position {position} has id {id}; ids must equal input positions")]
    BadId { position: usize, id: usize },

    #[error("number of boxes must be 1, 2 or 3 (got {0})")]
    InvalidBoxCount(usize),

    #[error("split index {m} is outside 0..={n}")]
    SplitOutOfRange { m: usize, n: usize },

    #[error("instance with {n} points exceeds the oracle limit of {limit} for p = {p}")]
    OracleLimit { n: usize, p: usize, limit: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
