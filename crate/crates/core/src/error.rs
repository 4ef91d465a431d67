use thiserror::Error;

/// Errors produced anywhere in the pipeline.
///
/// Variants named after an internal consistency check (`PartInconsistent`,
/// `DualityMismatch`, `NotEulerian`, `RecursionInconsistent`,
/// `NotPolynomial`, `NegativeHodge`, `HodgeSymmetry`) never fire on valid
/// input; they mark a bug upstream.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("machine-word arithmetic overflowed")]
    Overflow,
    #[error("polynomial division is not exact")]
    NonExactDivision,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("pairing requires points on opposite lattices")]
    SameSidePairing,
    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polytope is empty")]
    Empty,
    #[error("no exponent vector of the requested degree exists")]
    EmptyNewton,
    #[error("Calabi-Yau condition fails for scaling relation {0}")]
    NotCalabiYau(usize),
    #[error("nef partition parts are inconsistent: {0}")]
    PartInconsistent(String),
    #[error("cone is not full-dimensional")]
    DegenerateCone,
    #[error("cone duality check failed: {0}")]
    DualityMismatch(String),
    #[error("face poset interval [{0}, {1}] is not Eulerian")]
    NotEulerian(usize, usize),
    #[error("B-polynomial recursion is inconsistent on an interval of rank {0}")]
    RecursionInconsistent(usize),
    #[error("graded series of a face of rank {0} is not a polynomial")]
    NotPolynomial(usize),
    #[error("interior lattice point budget exceeded ({0} points)")]
    CapExceeded(usize),
    #[error("negative Hodge number h[{p}][{q}] = {value}")]
    NegativeHodge { p: usize, q: usize, value: String },
    #[error("E-polynomial violates {0}")]
    HodgeSymmetry(String),
    #[error("exponent ({0}, {1}) outside the Hodge range")]
    ExponentOutOfRange(i64, i64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
