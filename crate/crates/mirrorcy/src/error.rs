use exactlin::LinError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MirrorError {
    #[error("not Calabi-Yau: {0}")]
    NotCalabiYau(String),
    #[error("invalid weights/degrees: {0}")]
    InvalidData(String),
    #[error("symplectic constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("unknown geometry `{0}`")]
    UnknownGeometry(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}
