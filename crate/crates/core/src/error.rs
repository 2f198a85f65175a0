//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coordinate domain: {0}")]
    CoordDomain(String),
    #[error("cell domain: {0}")]
    CellDomain(String),
    #[error("structure: {0}")]
    Structure(String),
    #[error("region shape: {0}")]
    RegionShape(String),
    #[error("classification: {0}")]
    Classification(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("no pixel cycle in residual pixel graph")]
    NoPixelCycle,
    #[error("thinness violation: {0}")]
    ThinnessViolation(String),
    #[error("unknown id: {0}")]
    UnknownId(String),
    #[error("search budget exhausted")]
    Exhausted,
    #[error("window capacity exceeded: {0}")]
    Capacity(String),
    #[error("gadget template invalid: {0}")]
    TemplateInvalid(String),
    #[error("layout failure: {0}")]
    LayoutFailure(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("monotonicity violation: {0}")]
    Monotonicity(String),
    #[error("planarity violation: {0}")]
    Planarity(String),
    #[error("certificate inconsistency: {0}")]
    CertificateInconsistency(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }
}
