use thiserror::Error;

/// Every failure the library can report. The variant name doubles as the
/// stable error code echoed by the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("element is not semisimple: {0}")]
    NotSemisimple(String),
    #[error("elements do not commute: {0}")]
    NotCommuting(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("not an embedded line: {0}")]
    NotEmbedding(String),
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("invalid curve form: {0}")]
    InvalidForm(String),
    #[error("group is not finite within bound {0}")]
    NotFiniteWithinBound(usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NotAutomorphism(_) => "NotAutomorphism",
            Error::NotReduced(_) => "NotReduced",
            Error::NotSemisimple(_) => "NotSemisimple",
            Error::NotCommuting(_) => "NotCommuting",
            Error::BadParameters(_) => "BadParameters",
            Error::NotEmbedding(_) => "NotEmbedding",
            Error::NotEquivariant(_) => "NotEquivariant",
            Error::InvalidForm(_) => "InvalidForm",
            Error::NotFiniteWithinBound(_) => "NotFiniteWithinBound",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
