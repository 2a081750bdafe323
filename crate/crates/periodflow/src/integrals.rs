use hpnum::{tanh_sinh, tanh_sinh_width, BigReal, PrecisionCtx, QuadOptions};
use serde::Serialize;

use crate::PeriodError;

/// `i^phase * value` with `value` real; the phase is only ever a power of `i`.
#[derive(Clone, Debug)]
pub struct Phased {
    pub value: BigReal,
    pub phase: u32,
}

impl Phased {
    /// `(re, im)` as doubles.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let v = self.value.to_f64();
        match self.phase % 4 {
            0 => (v, 0.0),
            1 => (0.0, v),
            2 => (-v, 0.0),
            _ => (0.0, -v),
        }
    }
}

fn check_t(t: f64) -> Result<(), PeriodError> {
    if t > 0.0 && t < 1.0 {
        Ok(())
    } else {
        Err(PeriodError::Domain(format!("t = {t} is outside (0, 1)")))
    }
}

fn quad_opts(ctx: &PrecisionCtx) -> QuadOptions {
    // coarse levels can agree with each other long before they are accurate
    QuadOptions { tol: ctx.target_abs_error, min_level: 6, max_level: 14 }
}

/// `int_0^1 du / sqrt(u (1 - u) (u + (1 - u) t))`.
///
/// This is also `int_1^(1/t) dx / sqrt(x (x - 1) (1 - t x))` after `u = (x - 1) t / (1 - t)`,
/// and equals `pi / AGM(1, sqrt t)`.
pub fn big_pi_1(t: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, PeriodError> {
    check_t(t.to_f64())?;
    let zero = ctx.zero();
    let one = ctx.one();
    let q = tanh_sinh(
        |_, u: &BigReal, v: &BigReal| {
            let inner = u + &(v * t);
            (&(u * v) * &inner).sqrt().recip()
        },
        &zero,
        &one,
        quad_opts(ctx),
    )?;
    Ok(q.value.with_extra_err(q.error_estimate))
}

/// `pi_1(t) = 2 int_1^(1/t) dx / sqrt(|1 - t x| |1 - x| x)` by quadrature in `x` itself.
pub fn pi_1_direct(t: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, PeriodError> {
    check_t(t.to_f64())?;
    let one = ctx.one();
    let upper = t.recip();
    let width = &(&one - t) / t;
    let q = tanh_sinh_width(
        // |1 - t x| = t (1/t - x)
        |x: &BigReal, a: &BigReal, b: &BigReal| (&(x * a) * &(b * t)).sqrt().recip(),
        &one,
        &upper,
        &width,
        quad_opts(ctx),
    )?;
    Ok(q.value.mul_i64(2).with_extra_err(2.0 * q.error_estimate))
}

/// `pi_d(t)` for `d = 1..=6`, returned as `i^(d-1)` times a real integral.
///
/// `d = 1` runs at the working precision of `ctx`. For `d >= 2` the inner integrals
/// are tabulated on a Chebyshev grid in `log x` and everything is in double precision;
/// the reported error combines the quadrature tolerance with the change between two
/// grid sizes.
pub fn pi_d(d: usize, t: &BigReal, ctx: &PrecisionCtx) -> Result<Phased, PeriodError> {
    if !(1..=6).contains(&d) {
        return Err(PeriodError::Domain(format!("d = {d} is outside 1..=6")));
    }
    let tf = t.to_f64();
    check_t(tf)?;
    if d == 1 {
        return Ok(Phased { value: big_pi_1(t, ctx)?.mul_i64(2), phase: 0 });
    }
    let coarse = chebyshev_chain(d, tf, 40)?;
    let fine = chebyshev_chain(d, tf, 64)?;
    let err = (fine - coarse).abs() + F64_TOL * fine.abs().max(1.0) * d as f64;
    Ok(Phased { value: BigReal::from_f64(fine, ctx.working_bits).with_extra_err(err), phase: (d - 1) as u32 })
}

const F64_TOL: f64 = 1e-12;

fn f64_opts() -> QuadOptions {
    QuadOptions { tol: F64_TOL, min_level: 5, max_level: 12 }
}

/// Real part of `pi_1 = 2 pi / AGM(1, sqrt x)` by quadrature.
fn r1(x: f64) -> Result<f64, PeriodError> {
    let q = tanh_sinh(|_, u: &f64, v: &f64| 1.0 / (u * v * (u + v * x)).sqrt(), &0.0, &1.0, f64_opts())?;
    Ok(2.0 * q.value)
}

/// One step of the recursion: `R_k(x)` from `R_(k-1)`, with the factor `i` dropped.
fn step<F: Fn(f64) -> f64>(k: usize, x: f64, prev: F) -> Result<f64, PeriodError> {
    if k % 2 == 0 {
        // y = x + (1 - x) s turns 1/sqrt((1 - y)(y - x)) into 1/sqrt(s (1 - s))
        let q = tanh_sinh(|s: &f64, ds: &f64, es: &f64| prev(x + (1.0 - x) * s) / (ds * es).sqrt(), &0.0, &1.0, f64_opts())?;
        Ok(q.value)
    } else {
        // y = x cosh^2 v turns dy / sqrt(y (y - x)) into 2 dv
        let top = (1.0 / x.sqrt()).acosh();
        let q = tanh_sinh(|v: &f64, _, _| prev((x * v.cosh() * v.cosh()).min(1.0)), &0.0, &top, f64_opts())?;
        Ok(2.0 * q.value)
    }
}

/// Power of `(1 - x)` split off `R_k` before interpolating, so that the rest is smooth at `x = 1`.
fn edge_exponent(k: usize) -> f64 {
    ((k - 1) / 2) as f64 / 2.0
}

/// Chebyshev interpolant of `R_k(x) / (1 - x)^e` in `log x` over `[t, 1]`.
struct Cheb {
    lo: f64,
    coeffs: Vec<f64>,
    expo: f64,
}

impl Cheb {
    fn build<F: Fn(f64) -> Result<f64, PeriodError>>(lo: f64, n: usize, expo: f64, f: F) -> Result<Self, PeriodError> {
        let nodes: Vec<f64> = (0..n).map(|j| (std::f64::consts::PI * (j as f64 + 0.5) / n as f64).cos()).collect();
        let vals = nodes
            .iter()
            .map(|&s| {
                let x = (lo * (1.0 - s) / 2.0).exp();
                Ok(f(x)? / (1.0 - x).powf(expo))
            })
            .collect::<Result<Vec<f64>, PeriodError>>()?;
        let coeffs = (0..n)
            .map(|m| {
                let s: f64 = (0..n)
                    .map(|j| vals[j] * (std::f64::consts::PI * m as f64 * (j as f64 + 0.5) / n as f64).cos())
                    .sum();
                s * 2.0 / n as f64
            })
            .collect();
        Ok(Cheb { lo, coeffs, expo })
    }

    fn eval(&self, x: f64) -> f64 {
        let s = (1.0 - 2.0 * x.ln() / self.lo).clamp(-1.0, 1.0);
        let (mut b1, mut b2) = (0.0, 0.0);
        for c in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * s * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        let g = s * b1 - b2 + self.coeffs[0] / 2.0;
        g * (1.0 - x).max(0.0).powf(self.expo)
    }
}

fn chebyshev_chain(d: usize, t: f64, n: usize) -> Result<f64, PeriodError> {
    let lo = t.ln();
    let mut table = Cheb::build(lo, n, edge_exponent(1), r1)?;
    for k in 2..d {
        let prev = &table;
        table = Cheb::build(lo, n, edge_exponent(k), |x| step(k, x, |y| prev.eval(y)))?;
    }
    step(d, t, |y| table.eval(y))
}

/// `pi_d(t) / i^(d-1)` with every inner integral done afresh in its original variable.
///
/// Independent of the tabulated path in [`pi_d`] and far slower; meant for `d <= 3`.
pub fn pi_d_nested(d: usize, t: f64) -> Result<f64, PeriodError> {
    if !(1..=6).contains(&d) {
        return Err(PeriodError::Domain(format!("d = {d} is outside 1..=6")));
    }
    check_t(t)?;
    nested(d, t, 1.0 - t)
}

fn nested(d: usize, t: f64, one_minus_t: f64) -> Result<f64, PeriodError> {
    if d == 1 {
        return r1(t);
    }
    let mut failure = None;
    let mut inner = |x: f64, dx: f64| match nested(d - 1, x, dx) {
        Ok(v) => v,
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    };
    let q = if d % 2 == 0 {
        tanh_sinh_width(|x: &f64, a: &f64, b: &f64| inner(*x, *b) / (a * b).sqrt(), &t, &1.0, &one_minus_t, f64_opts())
    } else {
        tanh_sinh_width(|x: &f64, a: &f64, b: &f64| inner(*x, *b) / (x * a).sqrt(), &t, &1.0, &one_minus_t, f64_opts())
    };
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(q?.value)
}

/// `int_1^inf du / (u sqrt(u - 1))`, which must come out as `pi`.
pub fn vanishing_cycle_check(ctx: &PrecisionCtx) -> Result<BigReal, PeriodError> {
    let q = hpnum::tanh_sinh_to_infinity(|u: &BigReal, off: &BigReal| (u * &off.sqrt()).recip(), &ctx.one(), quad_opts(ctx))?;
    Ok(q.value.with_extra_err(q.error_estimate))
}

/// Phase convention of the iterated integrals, for reports.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PhaseConvention {
    pub d: usize,
    pub power_of_i: u32,
}

impl PhaseConvention {
    pub fn for_degree(d: usize) -> Self {
        PhaseConvention { d, power_of_i: d.saturating_sub(1) as u32 }
    }
}
