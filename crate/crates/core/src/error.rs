//! Error taxonomy shared by every module.
//!
//! Four classes, kept deliberately coarse so callers can map them onto exit
//! codes: malformed text input (`Parse`, with position), arguments outside an
//! operation's domain (`Domain`), structurally invalid arguments (`Input`),
//! and exceeded resource caps (`Resource`).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed substitution or word file; positions are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Argument is well-formed but outside the operation's mathematical domain
    /// (non-primitive substitution passed to a Perron routine, and so on).
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid argument (empty language, zero-length range, ...).
    #[error("input error: {0}")]
    Input(String),

    /// A configured memory or size cap would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
