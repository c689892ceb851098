use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("cannot allocate sigma table for bound {0}")]
    Allocation(u64),

    #[error("invalid sigma cache: {0}")]
    InvalidCache(String),

    #[error("no feebly amicable partner is possible for 1")]
    UnitNoPartner,

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
