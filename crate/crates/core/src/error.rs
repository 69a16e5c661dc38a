//! Error type shared by the whole crate.
//!
//! The variants mirror the failure classes of the public API: domain errors
//! (an argument is outside the operation's domain), violated preconditions,
//! resource bounds (ambient cap, enumeration bounds), parse errors for the
//! text/JSON formats, and internal consistency failures that signal a bug
//! rather than bad input.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

/// Maximum ambient size a `Subset` or `Family` may have.
///
/// Faces are stored as `u32` bitmasks, and the faces-mode complement
/// materializes the full powerset of the ambient, so the ambient is
/// capped. The default of 24 can be overridden with the `PSO_AMBIENT_CAP`
/// environment variable, up to a hard ceiling of 30.
pub fn ambient_cap() -> usize {
    use std::sync::OnceLock;
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("PSO_AMBIENT_CAP")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(24)
            .min(30)
    })
}

pub(crate) fn check_ambient(n: usize) -> Result<()> {
    if n > ambient_cap() {
        Err(Error::resource(format!(
            "ambient {} exceeds the configured cap {}",
            n,
            ambient_cap()
        )))
    } else {
        Ok(())
    }
}
