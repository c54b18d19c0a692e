use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("resource guard exceeded: {0}")]
    Guard(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("no vexillary ascent chain for {0}")]
    NoChain(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 64,
            Error::Guard(_) => 69,
            _ => 65,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
