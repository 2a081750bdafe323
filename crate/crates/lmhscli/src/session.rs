use std::sync::OnceLock;

use hpnum::PrecisionCtx;
use zetaseries::{ConstantTable, Ladder, Ladders, SeriesError, Source};

use crate::{CliError, RunConfig};

type Table = OnceLock<Result<ConstantTable, SeriesError>>;

/// A validated configuration plus the expensive constant tables, computed on first use.
pub struct Session {
    pub config: RunConfig,
    ctx: PrecisionCtx,
    lattice: Table,
    lattice_halved: Table,
    reduced: Table,
}

/// Rungs up to half the top cutoff.
pub fn halved(l: &Ladder) -> Ladder {
    let top = l.max() / 2;
    let ks: Vec<usize> = l.ks().iter().copied().filter(|&k| k <= top).collect();
    Ladder::new(ks).unwrap_or_else(|_| l.clone())
}

impl Session {
    pub fn new(config: RunConfig) -> Result<Self, CliError> {
        config.validate()?;
        // about 15% of the working digits
        let target = 10f64.powf(-0.15 * config.precision_bits as f64);
        let ctx = PrecisionCtx::new(config.precision_bits, target);
        Ok(Session { config, ctx, lattice: OnceLock::new(), lattice_halved: OnceLock::new(), reduced: OnceLock::new() })
    }

    pub fn ctx(&self) -> &PrecisionCtx {
        &self.ctx
    }

    pub fn ladders(&self) -> Ladders {
        Ladders { double: Ladder::default_for(2), quadruple: self.config.ladder() }
    }

    pub fn halved_ladders(&self) -> Ladders {
        let l = self.ladders();
        Ladders { double: halved(&l.double), quadruple: halved(&l.quadruple) }
    }

    fn get<'a>(&self, cell: &'a Table, source: impl FnOnce() -> Source) -> Result<&'a ConstantTable, CliError> {
        cell.get_or_init(|| ConstantTable::compute(&self.ctx, &source())).as_ref().map_err(|e| e.clone().into())
    }

    /// Lattice sums at the configured cutoffs.
    pub fn lattice(&self) -> Result<&ConstantTable, CliError> {
        self.get(&self.lattice, || Source::Lattice(self.ladders()))
    }

    /// Lattice sums with every ladder cut at half its top rung.
    pub fn lattice_halved(&self) -> Result<&ConstantTable, CliError> {
        self.get(&self.lattice_halved, || Source::Lattice(self.halved_ladders()))
    }

    /// One-index forms.
    pub fn reduced(&self) -> Result<&ConstantTable, CliError> {
        self.get(&self.reduced, || Source::Reduced)
    }
}
