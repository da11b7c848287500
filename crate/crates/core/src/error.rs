use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unit ideal")]
    UnitIdeal,
    #[error("no stabilization: {0}")]
    NoStabilization(String),
    #[error("degree bound {0} exceeded")]
    DegreeBoundExceeded(u32),
    #[error("height undetermined: {0}")]
    HeightUndetermined(String),
    #[error("not logarithmic at origin: {0}")]
    NotLogarithmic(String),
    #[error("not quasi-homogeneous: {0}")]
    NotQuasiHomogeneous(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("H not rationally diagonalizable")]
    NotDiagonalizable,
    #[error("dimension too large: {0}")]
    DimensionTooLarge(usize),
    #[error("too many generators: {0}")]
    TooManyGenerators(usize),
    #[error("J not m-primary")]
    NotPrimary,
    #[error("ill-defined leading term: {0}")]
    IllDefinedLeadingTerm(String),
    #[error("not monomial with respect to coordinate torus")]
    NotMonomial,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Wraps the message of a precondition-type error with extra context.
    pub fn context(self, ctx: &str) -> Error {
        match self {
            Error::Precondition(m) => Error::Precondition(format!("{ctx}: {m}")),
            Error::Inconsistent(m) => Error::Inconsistent(format!("{ctx}: {m}")),
            other => other,
        }
    }

    /// True for errors caused by the input violating an operation's preconditions
    /// (as opposed to syntax errors or internal failures).
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
