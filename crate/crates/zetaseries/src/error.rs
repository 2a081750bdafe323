use hpnum::HpError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("invalid series spec: {0}")]
    InvalidSpec(String),
    #[error("partial sums do not stabilize (observed decay exponent {rate:.3})")]
    DivergenceDetected { rate: f64 },
    #[error("cutoff ladder must be non-empty and strictly increasing")]
    BadLadder,
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("index {0} out of range")]
    OutOfRange(u32),
    #[error("input error {err:.3e} too large for denominators up to {max_den}")]
    InsufficientPrecision { err: f64, max_den: u64 },
    #[error("no rational with denominator <= {max_den} within {residual:.3e}")]
    NoMatch { max_den: u64, residual: f64 },
    #[error("tolerance exceeded: {}", fmt_residuals(.0))]
    ToleranceExceeded(Vec<(String, f64)>),
    #[error(transparent)]
    Hp(#[from] HpError),
}

fn fmt_residuals(r: &[(String, f64)]) -> String {
    r.iter().map(|(k, v)| format!("{k}={v:.3e}")).collect::<Vec<_>>().join(", ")
}
