use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use zetaseries::Ladder;

use crate::{CliError, GlobalArgs};

/// Environment variables `LMHS_<FLAG>` stand in for missing flags, e.g.
/// `LMHS_PRECISION_BITS=512` or `LMHS_CUTOFFS=8,16,32`. `LMHS_CONFIG` names the file.
pub const ENV_PREFIX: &str = "LMHS_";

/// Suite names accepted under `[tolerances]`.
pub const SUITE_KEYS: [&str; 9] =
    ["cicy", "constants", "identities", "d3", "d6", "appendix", "matrices", "asymptotics", "recognize"];

/// The configuration file: one flat TOML document.
///
/// ```toml
/// precision_bits = 256
/// cutoffs = [8, 12, 16, 24, 32, 48, 64]
/// tolerances = { identities = 1e-6, d3 = 1e-4 }
/// ```
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub precision_bits: Option<usize>,
    pub tolerance: Option<f64>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    pub cutoffs: Option<Vec<usize>>,
    pub geometry: Option<String>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub precision_bits: usize,
    /// Replaces every per-check default tolerance when set.
    pub tolerance: Option<f64>,
    /// Per-suite replacements, used when `tolerance` is unset.
    pub tolerances: BTreeMap<String, f64>,
    /// Cutoff ladder for the four-index lattice sums.
    pub cutoffs: Vec<usize>,
    pub geometry: Option<String>,
    pub out: Option<PathBuf>,
    /// Seed for the random conjugates in the matrix suite.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: 256,
            tolerance: None,
            tolerances: BTreeMap::new(),
            cutoffs: Ladder::default_for(4).ks().to_vec(),
            geometry: None,
            out: None,
            seed: 0x5eed,
        }
    }
}

impl RunConfig {
    /// Flags (or their environment variables) over the file over the defaults.
    pub fn resolve(flags: &GlobalArgs) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let base = RunConfig::default();
        let cfg = RunConfig {
            precision_bits: flags.precision_bits.or(file.precision_bits).unwrap_or(base.precision_bits),
            tolerance: flags.tolerance.or(file.tolerance),
            tolerances: file.tolerances,
            cutoffs: flags.cutoffs.clone().or(file.cutoffs).unwrap_or(base.cutoffs),
            geometry: file.geometry,
            out: flags.out.clone().or(file.out),
            seed: flags.seed.or(file.seed).unwrap_or(base.seed),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !(64..=4096).contains(&self.precision_bits) {
            return Err(CliError::Config(format!("precision_bits = {} is outside 64..=4096", self.precision_bits)));
        }
        let positive = |name: &str, t: f64| {
            if t.is_finite() && t > 0.0 {
                Ok(())
            } else {
                Err(CliError::Config(format!("{name} = {t} must be positive")))
            }
        };
        if let Some(t) = self.tolerance {
            positive("tolerance", t)?;
        }
        for (k, &t) in &self.tolerances {
            if !SUITE_KEYS.contains(&k.as_str()) {
                return Err(CliError::Config(format!("unknown suite `{k}` in tolerances")));
            }
            positive(&format!("tolerances.{k}"), t)?;
        }
        Ladder::new(self.cutoffs.clone()).map_err(|e| CliError::Config(format!("cutoffs: {e}")))?;
        Ok(())
    }

    pub fn tolerance_for(&self, suite: &str, default: f64) -> f64 {
        self.tolerance.or_else(|| self.tolerances.get(suite).copied()).unwrap_or(default)
    }

    pub fn ladder(&self) -> Ladder {
        Ladder::new(self.cutoffs.clone()).expect("validated")
    }
}
