use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported residue: {a} ≡ 1 (mod {r}) has no closed form here")]
    UnsupportedResidue { r: u64, a: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("expected {expected} arguments for {poly}, got {got}")]
    Arity {
        poly: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("triple ({b}, {c}, {d}) does not satisfy {r}/{a}")]
    NotAnIdentity {
        r: u64,
        a: u64,
        b: String,
        c: String,
        d: String,
    },

    #[error("no p1 witness found for q = {q}")]
    NotFound { q: u64 },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("corrupt batch file {}: {reason}", path.display())]
    Corrupt { path: PathBuf, reason: String },

    #[error("refusing to resume: {0}")]
    ConfigMismatch(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
