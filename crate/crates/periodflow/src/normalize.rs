use exactlin::{rat, PeriodEntry, Rat};
use hpnum::{BigReal, LogPoly, PrecisionCtx};
use serde::Serialize;

use crate::PeriodError;

/// `log alpha` for `alpha = 4^(d+1)`.
pub fn normalization_shift(d: usize, ctx: &PrecisionCtx) -> BigReal {
    hpnum::log2(ctx).mul_i64(2 * (d as i64 + 1))
}

/// Rewrites `P(l(t))` in the coordinate `s = t / 4^(d+1)`, i.e. substitutes
/// `l(t) = l(s) + (d+1) l(4)`, and checks that the `l^(d-1)` coefficient is gone.
pub fn normalize_local_coordinate(p: &LogPoly, d: usize, tolerance: f64, ctx: &PrecisionCtx) -> Result<LogPoly, PeriodError> {
    if d == 0 || p.degree() > d {
        return Err(PeriodError::InvalidConfig(format!("degree {} polynomial for d = {d}", p.degree())));
    }
    let out = p.shift_log(&normalization_shift(d, ctx));
    let residual = out.coeffs.get(d - 1).map_or(0.0, |c| c.to_f64().abs());
    if !(residual <= tolerance) {
        return Err(PeriodError::NormalizationFailed { degree: d - 1, residual, tolerance });
    }
    Ok(out)
}

/// Inverse of the substitution in [`normalize_local_coordinate`], without the check.
pub fn denormalize(p: &LogPoly, d: usize, ctx: &PrecisionCtx) -> LogPoly {
    p.shift_log(&-normalization_shift(d, ctx))
}

/// `k! / (-2)^k`.
pub fn bottom_weight(k: usize) -> Rat {
    let fact: i64 = (1..=k as i64).product();
    let pow = (-2i64).pow(k as u32);
    rat(fact, pow)
}

/// One entry of the bottom row: `value * (2 pi i)^two_pi_i_power`.
#[derive(Clone, Debug, Serialize)]
pub struct RowEntry {
    pub value: f64,
    pub error: f64,
    pub two_pi_i_power: i32,
}

/// Bottom row of the normalized limiting period matrix from the `l^k` coefficients
/// `a_k` of the normalized polynomial: entries `k! a_k / (-2)^k`, scaled so the last is 1.
pub fn bottom_row(p: &LogPoly, d: usize) -> Result<Vec<RowEntry>, PeriodError> {
    if p.degree() != d {
        return Err(PeriodError::InvalidConfig(format!("degree {} polynomial for d = {d}", p.degree())));
    }
    let weighted: Vec<BigReal> = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let w = bottom_weight(k);
            c.mul_i64(w.numer().try_into().expect("small")).div_i64(w.denom().try_into().expect("small"))
        })
        .collect();
    let last = &weighted[d];
    if last.is_zero() {
        return Err(PeriodError::InvalidConfig("leading coefficient vanishes".into()));
    }
    Ok(weighted
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let v = w / last;
            RowEntry { value: v.to_f64(), error: v.err(), two_pi_i_power: k as i32 - d as i32 }
        })
        .collect())
}

/// As [`bottom_row`] for exact coefficients.
pub fn bottom_row_exact(coeffs: &[PeriodEntry]) -> Result<Vec<PeriodEntry>, PeriodError> {
    let d = coeffs.len().checked_sub(1).ok_or_else(|| PeriodError::InvalidConfig("empty polynomial".into()))?;
    let last = &coeffs[d];
    if !last.is_rational() || last.is_zero() {
        return Err(PeriodError::InvalidConfig("leading coefficient must be a non-zero rational".into()));
    }
    let norm = bottom_weight(d) * last.rational_part();
    Ok(coeffs.iter().enumerate().map(|(k, c)| c.scale(&(bottom_weight(k) / &norm))).collect())
}
