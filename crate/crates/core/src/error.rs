use thiserror::Error;

/// Errors produced by parsing, bijection inversion, counting and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `position` is 1-based (entry index for
    /// permutations, character index for paths).
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// Well-formed step string that is not a Schroder path. `step` is the
    /// 1-based index of the first violating step.
    #[error("not a Schroder path: step {step}: {reason}")]
    NotAPath { step: usize, reason: String },

    #[error("permutation {permutation} is not in the class: it contains the pattern {pattern}")]
    NotInClass { permutation: String, pattern: String },

    #[error("{what}: size {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("{what}: {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("unsupported query: {0}")]
    UnsupportedQuery(String),

    #[error("cache file {path}: {message}")]
    Cache { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn cap(what: &'static str, requested: usize, cap: usize) -> Self {
        Error::CapExceeded {
            what,
            requested,
            cap,
        }
    }

    pub(crate) fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
        if requested > cap {
            Err(Self::cap(what, requested, cap))
        } else {
            Ok(())
        }
    }
}
