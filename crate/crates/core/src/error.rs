use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("too many vertices: {0} (limit {limit})", limit = crate::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("{0} is not contained in the ground set")]
    NotInGroundSet(String),
    #[error("skeleton dimension {0} out of range")]
    DimensionOutOfRange(isize),
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("operation undefined on the unit ideal")]
    UnitIdeal,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("vertex {vertex} has degree {degree}, expected 1")]
    NotDegreeOne { vertex: usize, degree: usize },
    #[error("empty Betti table")]
    EmptyTable,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
