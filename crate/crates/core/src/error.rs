use thiserror::Error;

use crate::triples::TripleKind;

/// Information a masked protocol unavoidably discloses when its input is
/// outside the domain it was designed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeakSignal {
    /// The shared field element being inverted is zero.
    ZeroSecret,
    /// The shared ring element being inverted is not a unit.
    NonUnit,
    /// The masked matrix had a zero (or non-unit) determinant, so the secret
    /// matrix is singular.
    Singular,
    /// A public evaluation point of the characteristic polynomial hit an
    /// eigenvalue of the secret matrix.
    Eigenvalue,
}

impl std::fmt::Display for LeakSignal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LeakSignal::ZeroSecret => "secret is zero",
            LeakSignal::NonUnit => "secret is not a unit",
            LeakSignal::Singular => "secret matrix is singular",
            LeakSignal::Eigenvalue => "public point is an eigenvalue",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("protocol bug: {0}")]
    ProtocolBug(String),

    #[error("preprocessing exhausted: no {0} triple left")]
    PreprocessingExhausted(TripleKind),

    #[error("triple {0} was already consumed")]
    TripleReuse(u64),

    #[error("leak signal: {0}")]
    Leak(LeakSignal),

    #[error("aborted after exhausting retries: {0}")]
    RetriesExhausted(String),

    #[error("correctness failure: {0}")]
    Correctness(String),

    #[error("checksum error: {0}")]
    Checksum(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn bug(msg: impl Into<String>) -> Self {
        Error::ProtocolBug(msg.into())
    }

    pub fn is_leak(&self) -> bool {
        matches!(self, Error::Leak(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
