use hpnum::{BigReal, LogPoly, PrecisionCtx};
use serde::Serialize;

use crate::PeriodError;

/// Sample ladder and solver settings for [`fit_log_poly`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitConfig {
    /// Points `t_j` in `(0, 0.1]`.
    pub samples: Vec<f64>,
    /// Largest error bar accepted on a `t^0 log^j` coefficient.
    pub tolerance: f64,
    /// The model also carries `t^k log^j t` for `k = 1..=corrections`.
    pub corrections: usize,
}

impl FitConfig {
    /// `n` points spaced geometrically from `t_min` to `t_max`.
    pub fn geometric(t_min: f64, t_max: f64, n: usize, tolerance: f64) -> Result<Self, PeriodError> {
        if n < 2 || !(t_min > 0.0 && t_min < t_max) {
            return Err(PeriodError::InvalidConfig(format!("need n >= 2 and 0 < t_min < t_max, got {n} points on [{t_min}, {t_max}]")));
        }
        let r = (t_max / t_min).ln() / (n - 1) as f64;
        let samples = (0..n).map(|j| if j == n - 1 { t_max } else { t_min * (r * j as f64).exp() }).collect();
        let cfg = FitConfig { samples, tolerance, corrections: 2 };
        cfg.check_samples()?;
        Ok(cfg)
    }

    pub fn with_corrections(self, corrections: usize) -> Self {
        FitConfig { corrections, ..self }
    }

    fn check_samples(&self) -> Result<(), PeriodError> {
        if let Some(t) = self.samples.iter().find(|&&t| !(t > 0.0 && t <= 0.1)) {
            return Err(PeriodError::InvalidConfig(format!("sample t = {t} outside (0, 0.1]")));
        }
        if !(self.tolerance > 0.0) {
            return Err(PeriodError::InvalidConfig("tolerance must be positive".into()));
        }
        Ok(())
    }

    /// Number of free parameters once `fixed` coefficients are pinned.
    pub fn unknowns(&self, degree: usize, fixed: usize) -> usize {
        (degree + 1) * (self.corrections + 1) - fixed
    }
}

/// Result of a log-polynomial fit. `poly` holds the `t^0` part, each coefficient
/// carrying its error bar.
#[derive(Clone, Debug)]
pub struct LogFit {
    pub poly: LogPoly,
    pub error_bars: Vec<f64>,
    /// Root mean square of the sample residuals.
    pub rms_residual: f64,
    pub dof: usize,
}

/// Least-squares fit of `sum_(k, j) c_jk t^k log^j t` to `(t, value)` samples.
///
/// `fixed` pins some `t^0` coefficients `(j, c_j0)`; they are subtracted from the data
/// and reported with zero error bar. Error bars are three standard deviations from the
/// residual scatter plus the sample errors pushed through the pseudo-inverse.
pub fn fit_log_poly(
    samples: &[(BigReal, BigReal)],
    degree: usize,
    fixed: &[(usize, BigReal)],
    cfg: &FitConfig,
    ctx: &PrecisionCtx,
) -> Result<LogFit, PeriodError> {
    if degree > 6 {
        return Err(PeriodError::InvalidConfig(format!("degree {degree} above 6")));
    }
    if let Some((j, _)) = fixed.iter().find(|(j, _)| *j > degree) {
        return Err(PeriodError::InvalidConfig(format!("fixed coefficient index {j} above degree {degree}")));
    }
    if let Some((t, _)) = samples.iter().find(|(t, _)| !(t.to_f64() > 0.0 && t.to_f64() <= 0.1)) {
        return Err(PeriodError::InvalidConfig(format!("sample t = {} outside (0, 0.1]", t.to_f64())));
    }
    let cols: Vec<(usize, usize)> = (0..=cfg.corrections)
        .flat_map(|k| (0..=degree).map(move |j| (k, j)))
        .filter(|&(k, j)| k > 0 || fixed.iter().all(|(f, _)| *f != j))
        .collect();
    let p = cols.len();
    let n = samples.len();
    if n <= p {
        return Err(PeriodError::InvalidConfig(format!("{n} samples for {p} unknowns; need at least {}", p + 1)));
    }
    let prec = 2 * ctx.working_bits;
    let zero = BigReal::from_i64(0, prec);

    // design matrix and right-hand side
    let mut a: Vec<Vec<BigReal>> = Vec::with_capacity(n);
    let mut b: Vec<BigReal> = Vec::with_capacity(n);
    let mut sample_err = Vec::with_capacity(n);
    for (t, v) in samples {
        let t = t.round_to(prec);
        let l = t.ln();
        let mut rhs = v.round_to(prec);
        for (j, c) in fixed {
            rhs = &rhs - &(c * &l.powi(*j as u32));
        }
        a.push(cols.iter().map(|&(k, j)| &t.powi(k as u32) * &l.powi(j as u32)).collect());
        b.push(rhs);
        sample_err.push(v.err());
    }
    // scale columns to unit max so the normal matrix stays balanced
    let scale: Vec<BigReal> = (0..p)
        .map(|c| {
            let m = a.iter().map(|row| row[c].abs()).max_by(|x, y| x.cmp_value(y)).expect("rows");
            m.recip()
        })
        .collect();
    for row in &mut a {
        for (x, s) in row.iter_mut().zip(&scale) {
            *x = &*x * s;
        }
    }
    let mut normal = vec![vec![zero.clone(); p]; p];
    for row in &a {
        for i in 0..p {
            for j in 0..p {
                normal[i][j] = &normal[i][j] + &(&row[i] * &row[j]);
            }
        }
    }
    let inv = invert(normal).ok_or_else(|| PeriodError::InvalidConfig("singular normal matrix; samples too clustered".into()))?;
    // pseudo-inverse rows: inv * a^T
    let pinv: Vec<Vec<BigReal>> = (0..p)
        .map(|i| {
            a.iter()
                .map(|row| row.iter().zip(&inv[i]).fold(zero.clone(), |acc, (x, y)| &acc + &(x * y)))
                .collect()
        })
        .collect();
    let coeffs: Vec<BigReal> =
        pinv.iter().map(|r| r.iter().zip(&b).fold(zero.clone(), |acc, (x, y)| &acc + &(x * y))).collect();
    let mut rss = 0.0;
    for (row, rhs) in a.iter().zip(&b) {
        let fitted = row.iter().zip(&coeffs).fold(zero.clone(), |acc, (x, y)| &acc + &(x * y));
        let r = (rhs - &fitted).to_f64();
        rss += r * r;
    }
    let dof = n - p;
    let sigma2 = rss / dof as f64;
    let bars: Vec<f64> = (0..p)
        .map(|i| {
            let spread = 3.0 * (sigma2 * inv[i][i].to_f64().abs()).sqrt();
            let noise: f64 = pinv[i].iter().zip(&sample_err).map(|(w, e)| w.to_f64().abs() * e).sum();
            (spread + noise) * scale[i].to_f64()
        })
        .collect();

    let mut out: Vec<BigReal> = (0..=degree).map(|_| ctx.zero()).collect();
    let mut error_bars = vec![0.0; degree + 1];
    for (j, c) in fixed {
        out[*j] = c.clone();
    }
    for (i, &(k, j)) in cols.iter().enumerate() {
        if k == 0 {
            let c = (&coeffs[i] * &scale[i]).round_to(ctx.working_bits);
            out[j] = c.with_extra_err(bars[i]);
            error_bars[j] = out[j].err();
        }
    }
    if let Some((index, &error_bar)) = error_bars.iter().enumerate().find(|(_, &e)| !(e <= cfg.tolerance)) {
        return Err(PeriodError::IllConditioned { index, error_bar, tolerance: cfg.tolerance });
    }
    Ok(LogFit { poly: LogPoly::new(out, 0), error_bars, rms_residual: (rss / n as f64).sqrt(), dof })
}

/// Gauss-Jordan with partial pivoting.
fn invert(mut m: Vec<Vec<BigReal>>) -> Option<Vec<Vec<BigReal>>> {
    let n = m.len();
    let prec = m[0][0].precision();
    let mut inv: Vec<Vec<BigReal>> =
        (0..n).map(|i| (0..n).map(|j| BigReal::from_i64((i == j) as i64, prec)).collect()).collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| m[x][col].abs().cmp_value(&m[y][col].abs()))?;
        if m[piv][col].is_zero() {
            return None;
        }
        m.swap(col, piv);
        inv.swap(col, piv);
        let d = m[col][col].recip();
        for j in 0..n {
            m[col][j] = &m[col][j] * &d;
            inv[col][j] = &inv[col][j] * &d;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                m[r][j] = &m[r][j] - &(&f * &m[col][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
            }
        }
    }
    Some(inv)
}
