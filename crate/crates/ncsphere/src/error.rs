use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("pole at q = {0}")]
    PoleAtValue(f64),
    #[error("chain operation needs positive degree")]
    DegreeZero,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operation not defined on {0}")]
    WrongAlgebra(String),
    #[error("phase does not have unit modulus: {0}")]
    NotUnitModulus(String),
    #[error("representation family needs a phase")]
    MissingPhase,
    #[error("operator is not trace class: {0}")]
    NotTraceClass(String),
    #[error("degree mismatch: cocycle has degree {cocycle}, chain has degree {chain}")]
    DegreeMismatch { cocycle: usize, chain: usize },
    #[error("pairing is not an integer: {0}")]
    NonIntegerPairing(String),
    #[error("matrix model violates relation {0}")]
    ModelVerificationFailed(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
