use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HpError {
    #[error("quadrature did not converge after {levels} levels (last change {estimate:.3e})")]
    NoConvergence { levels: u32, estimate: f64 },
    #[error("domain error: {0}")]
    DomainError(String),
}
