use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("matrix is not unipotent: (T - I)^n != 0")]
    NotUnipotent,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),
    #[error("product of two transcendental entries (weights {left} and {right})")]
    XiProduct { left: u32, right: u32 },
    #[error("cannot add Xi_{0} and Xi_{1} entries")]
    WeightMismatch(u32, u32),
    #[error("entry ({0}, {1}) is not rational")]
    NonRational(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("weight filtration self-check failed: {0}")]
    FiltrationCheck(String),
    #[error("bad matrix json: {0}")]
    Json(String),
}
