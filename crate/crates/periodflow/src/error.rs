use hpnum::HpError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PeriodError {
    #[error("{0}")]
    Domain(String),
    #[error("quadrature did not converge: {0}")]
    NoConvergence(#[from] HpError),
    #[error("invalid fit configuration: {0}")]
    InvalidConfig(String),
    #[error("coefficient of log^{index} has error bar {error_bar:.3e} above tolerance {tolerance:.3e}")]
    IllConditioned { index: usize, error_bar: f64, tolerance: f64 },
    #[error("degree {degree} coefficient {residual:.3e} does not vanish (tolerance {tolerance:.3e})")]
    NormalizationFailed { degree: usize, residual: f64, tolerance: f64 },
}
