use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("inconsistent Jacobi system at height {height} (triple {triple:?})")]
    InconsistentJacobi { height: usize, triple: (usize, usize, usize) },

    #[error("structure constants underdetermined at height {height}: {free} free parameters")]
    Underdetermined { height: usize, free: usize },

    #[error("full algebra construction failed: {0}")]
    Construction(String),

    #[error("reduction is not closed under the super-commutator")]
    ReductionNotClosed,

    #[error("reduction map {0} is not a degree-zero derivation")]
    NotDerivation(usize),

    #[error("bracket of levels {0} and {1} does not decompose over the prolongation")]
    Decomposition(i32, i32),

    #[error("threshold {threshold} is below depth + 1 = {min}")]
    Threshold { threshold: usize, min: usize },

    #[error("unknown {kind} `{value}`")]
    Unknown { kind: &'static str, value: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("bracket of elements {0} and {1} leaves their span")]
    NotClosed(usize, usize),

    #[error("not a contact field")]
    NotContact,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
