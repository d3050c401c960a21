//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("unknown link ({0}, {1})")]
    UnknownLink(usize, usize),

    #[error("unknown path `{0}`")]
    UnknownPath(String),

    #[error("qubit index {index} out of range for {num_qubits} qubits")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("size cap exceeded: {requested} qubits > {cap} ({representation})")]
    SizeCap {
        requested: usize,
        cap: usize,
        representation: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("expectation of a non-Hermitian Pauli string (phase ±i) is rejected")]
    NonHermitian,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
