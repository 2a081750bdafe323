use std::fmt;
use std::str::FromStr;

use hpnum::{BigReal, PrecisionCtx};
use serde::Serialize;

use crate::closed::{eval_zeta_poly, gamma_closed_poly, gamma_tilde_closed_poly};
use crate::eval::{eval_series, Ladder, SeriesValue};
use crate::reduced::reduced_constant;
use crate::spec::{DenFactor, Scale, SeriesSpec};
use crate::symbolic::Sym;
use crate::SeriesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Direct,
    Closed,
}

/// `sum_{k >= 1} (1/2)_k / k^n`.
pub fn gamma_spec(n: u32) -> SeriesSpec {
    SeriesSpec { indices: 1, poch: vec![vec![1]], den: vec![DenFactor::new(&[1], false); n as usize], scale: Scale::one() }
}

/// `(1/pi) sum_{k >= 0} (1/2)_k / (k + 1/2)^(n + 1)`.
pub fn gamma_tilde_spec(n: u32) -> SeriesSpec {
    SeriesSpec { indices: 1, poch: vec![vec![1]], den: vec![DenFactor::new(&[1], true); n as usize + 1], scale: Scale::inv_pi() }
}

pub fn gamma_n(n: u32, mode: Mode, ctx: &PrecisionCtx) -> Result<BigReal, SeriesError> {
    let closed = gamma_closed_poly(n)?;
    match mode {
        Mode::Closed => eval_zeta_poly(&closed, ctx),
        Mode::Direct => Ok(eval_series(&gamma_spec(n), ctx, &Ladder::default_for(1))?.value),
    }
}

pub fn gamma_tilde_n(n: u32, mode: Mode, ctx: &PrecisionCtx) -> Result<BigReal, SeriesError> {
    let closed = gamma_tilde_closed_poly(n)?;
    match mode {
        Mode::Closed => eval_zeta_poly(&closed, ctx),
        Mode::Direct => Ok(eval_series(&gamma_tilde_spec(n), ctx, &Ladder::default_for(1))?.value),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedConstant {
    Nu,
    NuPrime,
    Psi,
    Beta,
    Delta,
}

impl NamedConstant {
    pub const ALL: [NamedConstant; 5] =
        [NamedConstant::Beta, NamedConstant::Delta, NamedConstant::Psi, NamedConstant::Nu, NamedConstant::NuPrime];

    pub fn key(self) -> &'static str {
        match self {
            NamedConstant::Nu => "nu",
            NamedConstant::NuPrime => "nu_prime",
            NamedConstant::Psi => "psi",
            NamedConstant::Beta => "beta",
            NamedConstant::Delta => "delta",
        }
    }

    pub fn sym(self) -> Sym {
        match self {
            NamedConstant::Nu => Sym::Nu,
            NamedConstant::NuPrime => Sym::NuPrime,
            NamedConstant::Psi => Sym::Psi,
            NamedConstant::Beta => Sym::Beta,
            NamedConstant::Delta => Sym::Delta,
        }
    }

    /// The primed lattice sum defining the constant.
    pub fn spec(self) -> SeriesSpec {
        let half = |c: &[i64]| DenFactor::new(c, true);
        let whole = |c: &[i64]| DenFactor::new(c, false);
        match self {
            // indices (a, b)
            NamedConstant::Beta => SeriesSpec {
                indices: 2,
                poch: vec![vec![1, 0], vec![0, 1]],
                den: vec![half(&[0, 1]), whole(&[1, 0]), half(&[1, 1])],
                scale: Scale::inv_pi(),
            },
            NamedConstant::Delta => SeriesSpec {
                indices: 2,
                poch: vec![vec![1, 0], vec![0, 1]],
                den: vec![half(&[0, 1]), half(&[0, 1]), half(&[1, 1])],
                scale: Scale::inv_pi(),
            },
            NamedConstant::Psi => SeriesSpec {
                indices: 2,
                poch: vec![vec![1, 0], vec![0, 1]],
                den: vec![half(&[0, 1]), whole(&[1, 0]), whole(&[1, 0]), half(&[1, 1])],
                scale: Scale::inv_pi(),
            },
            // indices (k1, k2, a, b)
            NamedConstant::Nu => SeriesSpec {
                indices: 4,
                poch: vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
                den: vec![half(&[0, 0, -1, 1]), half(&[1, 0, 0, 1]), whole(&[1, 0, 1, 0]), whole(&[0, 1, 1, 0])],
                scale: Scale::inv_pi(),
            },
            NamedConstant::NuPrime => SeriesSpec {
                indices: 4,
                poch: vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
                den: vec![half(&[0, 0, -1, 1]), half(&[1, 0, 0, 1]), half(&[0, 1, 0, 1]), whole(&[1, 0, 1, 0])],
                scale: Scale::inv_pi(),
            },
        }
    }
}

impl fmt::Display for NamedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for NamedConstant {
    type Err = SeriesError;
    fn from_str(s: &str) -> Result<Self, SeriesError> {
        NamedConstant::ALL.into_iter().find(|c| c.key() == s).ok_or_else(|| SeriesError::UnknownConstant(s.to_string()))
    }
}

/// Evaluates a named constant; `ladder = None` picks the default for its index count.
pub fn named_constant(name: NamedConstant, ctx: &PrecisionCtx, ladder: Option<&Ladder>) -> Result<SeriesValue, SeriesError> {
    let spec = name.spec();
    let default = Ladder::default_for(spec.indices);
    eval_series(&spec, ctx, ladder.unwrap_or(&default))
}

/// Ladders used for two-index and four-index sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ladders {
    pub double: Ladder,
    pub quadruple: Ladder,
}

impl Default for Ladders {
    fn default() -> Self {
        Ladders { double: Ladder::default_for(2), quadruple: Ladder::default_for(4) }
    }
}

impl Ladders {
    fn for_spec(&self, spec: &SeriesSpec) -> &Ladder {
        if spec.indices >= 4 {
            &self.quadruple
        } else {
            &self.double
        }
    }
}

/// How the lattice constants are evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// The defining multi-index sums, extrapolated.
    Lattice(Ladders),
    /// One-index forms with the inner sums done in closed form.
    Reduced,
}

/// All constants feeding the period assemblies, evaluated once.
#[derive(Clone, Debug)]
pub struct ConstantTable {
    pub prec: usize,
    pub gamma: Vec<BigReal>,
    pub gamma_tilde: Vec<BigReal>,
    pub series: Vec<(NamedConstant, SeriesValue)>,
    pub zetas: Vec<BigReal>,
}

impl ConstantTable {
    pub fn compute(ctx: &PrecisionCtx, source: &Source) -> Result<Self, SeriesError> {
        let gamma = (1..=6).map(|n| gamma_n(n, Mode::Closed, ctx)).collect::<Result<_, _>>()?;
        let gamma_tilde = (0..=3).map(|n| gamma_tilde_n(n, Mode::Closed, ctx)).collect::<Result<_, _>>()?;
        let series = NamedConstant::ALL
            .into_iter()
            .map(|c| {
                let v = match source {
                    Source::Lattice(ladders) => {
                        let spec = c.spec();
                        eval_series(&spec, ctx, ladders.for_spec(&spec))
                    }
                    Source::Reduced => reduced_constant(c, ctx, None),
                };
                v.map(|v| (c, v))
            })
            .collect::<Result<_, _>>()?;
        let zetas = (1..=6).map(|n| crate::closed::zeta_value(n, ctx)).collect();
        Ok(ConstantTable { prec: ctx.working_bits, gamma, gamma_tilde, series, zetas })
    }

    pub fn series_value(&self, c: NamedConstant) -> &SeriesValue {
        &self.series.iter().find(|(k, _)| *k == c).expect("all constants present").1
    }

    pub fn value(&self, s: Sym) -> BigReal {
        match s {
            Sym::Zeta(n) => self.zetas[n as usize - 1].clone(),
            Sym::Gamma(n) => self.gamma[n as usize - 1].clone(),
            Sym::GammaTilde(n) => self.gamma_tilde[n as usize].clone(),
            Sym::Beta => self.series_value(NamedConstant::Beta).value.clone(),
            Sym::Delta => self.series_value(NamedConstant::Delta).value.clone(),
            Sym::Psi => self.series_value(NamedConstant::Psi).value.clone(),
            Sym::Nu => self.series_value(NamedConstant::Nu).value.clone(),
            Sym::NuPrime => self.series_value(NamedConstant::NuPrime).value.clone(),
        }
    }
}
