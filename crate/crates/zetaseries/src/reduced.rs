//! One-index forms of the lattice constants, obtained by doing the inner
//! sums in closed form. They converge like the one-index gamma sums and so
//! reach near double precision; the lattice sums remain the literal definition.

use hpnum::PrecisionCtx;

use crate::closed::zeta_value;
use crate::eval::{extrapolate, half_pochhammer_table, Ladder, SeriesValue};
use crate::named::NamedConstant;
use crate::SeriesError;

/// Trigamma `psi_1(x) = sum_{j >= 0} 1/(x + j)^2` for `x >= 1`.
fn trigamma_table(x0: f64, n: usize) -> Vec<f64> {
    // asymptotic expansion far out, then the recurrence psi_1(x) = psi_1(x + 1) + 1/x^2 downward
    let far = x0 + n as f64 + 64.0;
    let asym = |x: f64| 1.0 / x + 1.0 / (2.0 * x * x) + 1.0 / (6.0 * x.powi(3)) - 1.0 / (30.0 * x.powi(5)) + 1.0 / (42.0 * x.powi(7));
    let mut v = asym(far);
    let mut x = far;
    while x > x0 + n as f64 {
        x -= 1.0;
        v += 1.0 / (x * x);
    }
    let mut out = vec![0.0; n + 1];
    out[n] = v;
    for j in (0..n).rev() {
        let xj = x0 + j as f64;
        out[j] = out[j + 1] + 1.0 / (xj * xj);
    }
    out
}

struct Acc {
    rungs: Vec<usize>,
    out: Vec<(usize, f64)>,
    sum: f64,
    comp: f64,
}

impl Acc {
    fn new(ladder: &Ladder) -> Self {
        Acc { rungs: ladder.ks().to_vec(), out: vec![], sum: 0.0, comp: 0.0 }
    }

    fn push(&mut self, k: usize, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        if self.rungs.contains(&k) {
            self.out.push((k, self.sum + self.comp));
        }
    }
}

/// Partial sums of the one-index form of `c` at each rung (the `nu` form
/// still needs `gamma_1 beta - zeta(3)` added).
fn reduced_partials(c: NamedConstant, ladder: &Ladder) -> Vec<(usize, f64)> {
    let kmax = ladder.max();
    let p = half_pochhammer_table(kmax);
    let mut acc = Acc::new(ladder);
    match c {
        NamedConstant::Beta | NamedConstant::Psi => {
            let pow = if c == NamedConstant::Beta { 2 } else { 3 };
            acc.push(0, 0.0);
            for a in 1..=kmax {
                acc.push(a, p[a] * (1.0 - p[a]) / (a as f64).powi(pow));
            }
        }
        NamedConstant::Delta => {
            for b in 0..=kmax {
                let c = b as f64 + 0.5;
                acc.push(b, p[b] * p[b] / (c * c));
            }
        }
        NamedConstant::Nu => {
            // tails sum_{j > k} 1/j^2 = psi_1(k + 1)
            let tail = trigamma_table(1.0, kmax);
            let mut h = 0.0;
            acc.push(0, 0.0);
            for k in 1..=kmax {
                let kf = k as f64;
                h += 1.0 / kf;
                acc.push(k, p[k] * p[k] * (h / (kf * kf) - tail[k] / kf));
            }
        }
        NamedConstant::NuPrime => {
            // odd tails sum_{j > n} 1/(2j - 1)^2 = psi_1(n + 1/2) / 4
            let tail = trigamma_table(0.5, kmax + 2);
            let mut odd = 0.0;
            for b in 0..=kmax {
                let c = b as f64 + 0.5;
                odd += 1.0 / (2 * b + 1) as f64;
                let t = tail[b + 1] / 4.0;
                acc.push(b, p[b] * p[b] * (2.0 * odd / (c * c) - 4.0 * t / c - 1.0 / (c * c * c)));
            }
        }
    }
    acc.out
}

/// Named constant through its one-index form; `ladder = None` uses `2^7..2^14`.
pub fn reduced_constant(c: NamedConstant, ctx: &PrecisionCtx, ladder: Option<&Ladder>) -> Result<SeriesValue, SeriesError> {
    let default = Ladder::default_for(1);
    let ladder = ladder.unwrap_or(&default);
    let mut v = extrapolate(reduced_partials(c, ladder), 1, ctx)?;
    if c == NamedConstant::Nu {
        let beta = reduced_constant(NamedConstant::Beta, ctx, Some(ladder))?;
        let g1 = zeta_value(1, ctx);
        let shift = &(&g1 * &beta.value) - &zeta_value(3, ctx);
        v.value = &shift - &v.value;
        v.estimate = v.value.to_f64();
        v.error += g1.to_f64() * beta.error;
        v.partial_sums.iter_mut().for_each(|p| p.1 = shift.to_f64() - p.1);
    }
    Ok(v)
}
