//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong in a computation or while parsing input.
///
/// The CLI maps [`Error::Parse`] and [`Error::Usage`] to exit code 2 and all
/// other variants to exit code 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input; `pos` is the byte offset of the offending character.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Malformed command-line usage that is not a text-grammar problem.
    #[error("usage error: {0}")]
    Usage(String),

    /// A size guard was exceeded. `flag` names the knob that raises it.
    #[error("bound exceeded: {what} (limit {limit}; raise with {flag})")]
    Bound {
        what: String,
        limit: usize,
        flag: &'static str,
    },

    /// Inputs have inconsistent sizes, colors, or compositions.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// Operation applied to an element carrying the wrong basis tag.
    #[error("wrong basis: expected {expected}, found {found}")]
    WrongBasis { expected: String, found: String },

    /// Any other violated precondition.
    #[error("domain error: {0}")]
    Domain(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for errors that the CLI reports as usage errors (exit code 2).
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Usage(_))
    }
}
