use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "lmhs", version, about = "Limiting period data: exact tables, series constants and period asymptotics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Default, Args)]
pub struct GlobalArgs {
    /// TOML configuration file
    #[arg(long, global = true, env = "LMHS_CONFIG")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, env = "LMHS_PRECISION_BITS")]
    pub precision_bits: Option<usize>,
    /// Replace every default tolerance of the suite
    #[arg(long, global = true, env = "LMHS_TOLERANCE")]
    pub tolerance: Option<f64>,
    /// Cutoff ladder for four-index sums, strictly increasing
    #[arg(long, global = true, env = "LMHS_CUTOFFS", value_delimiter = ',')]
    pub cutoffs: Option<Vec<usize>>,
    /// Write the report here instead of stdout
    #[arg(long, global = true, env = "LMHS_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "LMHS_SEED")]
    pub seed: Option<u64>,
    /// JSON output (the default)
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Plain-text table rendered from the report
    #[arg(long, global = true)]
    pub table: bool,
    /// Include wall time in the JSON report (makes it run-dependent)
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Invariants, limiting period matrix, monodromy and Gram matrix of CICY threefolds
    Cicy(CicyArgs),
    /// Series constants in direct and closed form
    Constants(ConstantsArgs),
    /// Run a named verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Where series constants come from (default: one-index forms for d3, lattice otherwise)
        #[arg(long, value_enum)]
        source: Option<TableSource>,
    },
    /// Fit the period near t = 0 and normalize it
    Asymptotics(AsymptoticsArgs),
    /// Recognize a decimal as a rational multiple of a constant
    Recognize(RecognizeArgs),
}

#[derive(Clone, Debug, Default, Args)]
pub struct CicyArgs {
    /// Every tabulated geometry
    #[arg(long, conflicts_with_all = ["name", "weights"])]
    pub all: bool,
    /// A tabulated geometry, e.g. "P4[5]"
    #[arg(long, conflicts_with = "weights")]
    pub name: Option<String>,
    #[arg(long, value_delimiter = ',', requires = "degrees")]
    pub weights: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',', requires = "weights")]
    pub degrees: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Default, Args)]
pub struct ConstantsArgs {
    /// gamma_1..gamma_6, gamma_tilde_0..gamma_tilde_3, beta, delta, psi, nu, nu_prime
    pub names: Vec<String>,
    /// Every constant
    #[arg(long, conflicts_with = "names")]
    pub all: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    D3,
    D6,
    Appendix,
    Matrices,
}

impl Suite {
    pub fn key(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::D3 => "d3",
            Suite::D6 => "d6",
            Suite::Appendix => "appendix",
            Suite::Matrices => "matrices",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableSource {
    Lattice,
    Reduced,
}

#[derive(Clone, Debug, Args)]
pub struct AsymptoticsArgs {
    #[arg(long, default_value_t = 1)]
    pub d: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub t_min: f64,
    #[arg(long, default_value_t = 1e-4)]
    pub t_max: f64,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    /// Powers of t beyond t^0 in the fitted model
    #[arg(long, default_value_t = 2)]
    pub corrections: usize,
    /// Pin the log t coefficient (d = 1 only)
    #[arg(long)]
    pub fix_leading: bool,
}

impl Default for AsymptoticsArgs {
    fn default() -> Self {
        AsymptoticsArgs { d: 1, t_min: 1e-9, t_max: 1e-4, samples: 10, corrections: 2, fix_leading: false }
    }
}

#[derive(Clone, Debug, Args)]
pub struct RecognizeArgs {
    /// Decimal value, e.g. -57.69813
    #[arg(allow_hyphen_values = true)]
    pub value: String,
    /// 1, pi, pi^k or zeta<n>
    #[arg(long, default_value = "1")]
    pub base: String,
    #[arg(long, default_value_t = 1000)]
    pub max_den: u64,
    /// Absolute error of the value (default: half a unit in its last digit)
    #[arg(long)]
    pub error: Option<f64>,
}
