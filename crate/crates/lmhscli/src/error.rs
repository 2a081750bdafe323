use exactlin::LinError;
use hpnum::HpError;
use mirrorcy::MirrorError;
use periodflow::PeriodError;
use thiserror::Error;
use zetaseries::SeriesError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Geometry(#[from] MirrorError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Period(#[from] PeriodError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Numeric(#[from] HpError),
}

impl CliError {
    /// 2 for anything the user can fix in the invocation, 1 for failed computations.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Geometry(MirrorError::UnknownGeometry(_) | MirrorError::NotCalabiYau(_) | MirrorError::InvalidData(_)) => 2,
            CliError::Series(SeriesError::BadLadder | SeriesError::UnknownConstant(_)) => 2,
            CliError::Period(PeriodError::Domain(_) | PeriodError::InvalidConfig(_)) => 2,
            _ => 1,
        }
    }
}
