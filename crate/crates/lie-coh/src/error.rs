use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a subalgebra: [row {0}, row {1}] leaves the span")]
    NotSubalgebra(usize, usize),
    #[error("inclusion violation: {0}")]
    Inclusion(String),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("antisymmetry fails on basis pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("real structure: {0}")]
    RealStructure(String),
    #[error("no real structure attached to this algebra")]
    MissingRealStructure,
    #[error("representation is not a homomorphism on basis pair ({0}, {1})")]
    NotHomomorphism(usize, usize),
    #[error("d*d != 0 between degrees {0} and {1}")]
    DSquare(usize, usize),
    #[error("dimension cap exceeded: dim {0} > max {1} (raise --max-dim or LIE_COH_MAX_DIM)")]
    CapExceeded(usize, usize),
    #[error("subalgebra is not elliptic; classification: {0}")]
    NotElliptic(String),
    #[error("root system: {0}")]
    Roots(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
