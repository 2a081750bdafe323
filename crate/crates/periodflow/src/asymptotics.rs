use hpnum::{BigReal, LogPoly, PrecisionCtx};
use serde::Serialize;

use crate::fit::{fit_log_poly, FitConfig, LogFit};
use crate::integrals::{big_pi_1, pi_d};
use crate::normalize::{bottom_row, normalize_local_coordinate, RowEntry};
use crate::PeriodError;

/// `Pi_1 = PI1_FACTOR * (2 pi i)^PI1_SHIFT * big_pi_1`.
pub const PI1_FACTOR: i64 = 2;
pub const PI1_SHIFT: i32 = -1;

/// Evaluates `f` at every sample point, spreading the points over the available cores.
/// Output order follows the input.
pub fn sample<F>(ts: &[f64], ctx: &PrecisionCtx, f: F) -> Result<Vec<(BigReal, BigReal)>, PeriodError>
where
    F: Fn(&BigReal) -> Result<BigReal, PeriodError> + Sync,
{
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(ts.len().max(1));
    let chunk = ts.len().div_ceil(workers).max(1);
    let results: Vec<Result<Vec<(BigReal, BigReal)>, PeriodError>> = std::thread::scope(|s| {
        let handles: Vec<_> = ts
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                s.spawn(move || {
                    part.iter()
                        .map(|&t| {
                            let t = ctx.from_f64(t);
                            f(&t).map(|v| (t, v))
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sample worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(ts.len());
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Fits the real integral behind `pi_d` (the phase `i^(d-1)` dropped) in `log t`.
pub fn fit_pi_d(d: usize, cfg: &FitConfig, fixed: &[(usize, BigReal)], ctx: &PrecisionCtx) -> Result<LogFit, PeriodError> {
    let samples = sample(&cfg.samples, ctx, |t| Ok(pi_d(d, t, ctx)?.value))?;
    fit_log_poly(&samples, d, fixed, cfg, ctx)
}

/// Moves a fit of [`big_pi_1`] to `Pi_1` in powers of `l(t)`.
pub fn pi1_nilpotent(real_fit: &LogPoly, ctx: &PrecisionCtx) -> LogPoly {
    real_fit.scale(&ctx.from_i64(PI1_FACTOR)).times_two_pi_i(PI1_SHIFT)
}

#[derive(Clone, Debug, Serialize)]
pub struct D1Asymptotics {
    /// `t^0` coefficients of `log^j t` in `big_pi_1`, `j = 0, 1`.
    pub coefficients: Vec<f64>,
    pub error_bars: Vec<f64>,
    pub rms_residual: f64,
    /// `a_10` and `2 pi i * a_00` of `Pi_1^nilp = -(a_10 l + a_00)`.
    pub a10: f64,
    pub a00_times_two_pi_i: f64,
    /// `2 pi i * a_00 / a_10` against `log(4^-4) / 2`.
    pub ratio: f64,
    pub expected_ratio: f64,
    pub ratio_residual: f64,
    /// Fitted `a_10` over its known value 2.
    pub leading_ratio: f64,
    /// `2 pi i` times the constant term after `t = 16 s`.
    pub normalized_constant: f64,
    pub normalized_constant_error: f64,
    pub bottom_row: Vec<RowEntry>,
}

/// Fits `Pi_1` near `t = 0`, reads off `a_10`, `a_00`, normalizes with `alpha = 16`,
/// and forms the bottom row. With `fix_leading` the `log t` coefficient is pinned to
/// its known value `-1` and only the constant is fitted.
pub fn asymptotics_d1(cfg: &FitConfig, fix_leading: bool, ctx: &PrecisionCtx) -> Result<D1Asymptotics, PeriodError> {
    let samples = sample(&cfg.samples, ctx, |t| big_pi_1(t, ctx))?;
    let fixed = if fix_leading { vec![(1, ctx.from_i64(-1))] } else { vec![] };
    let fit = fit_log_poly(&samples, 1, &fixed, cfg, ctx)?;
    let nilp = pi1_nilpotent(&fit.poly, ctx);
    let ell = |p: &LogPoly, j: usize, k: i32| p.ell_coeff_over(j, k, ctx).expect("real ratio");
    let a10 = -ell(&nilp, 1, 0).to_f64();
    let a00 = -ell(&nilp, 0, -1).to_f64();
    let ratio = a00 / a10;
    let expected_ratio = -(256f64).ln() / 2.0;
    let normalized = normalize_local_coordinate(&nilp, 1, cfg.tolerance, ctx)?;
    let c0 = ell(&normalized, 0, -1);
    Ok(D1Asymptotics {
        coefficients: fit.poly.coeffs.iter().map(BigReal::to_f64).collect(),
        error_bars: fit.error_bars.clone(),
        rms_residual: fit.rms_residual,
        a10,
        a00_times_two_pi_i: a00,
        ratio,
        expected_ratio,
        ratio_residual: ((ratio - expected_ratio) / expected_ratio).abs(),
        leading_ratio: a10 / 2.0,
        normalized_constant: c0.to_f64(),
        normalized_constant_error: c0.err(),
        bottom_row: bottom_row(&normalized, 1)?,
    })
}
