use crate::{HpError, Real};

#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    /// Stop once successive levels differ by less than this.
    pub tol: f64,
    pub min_level: u32,
    pub max_level: u32,
}

impl QuadOptions {
    pub fn new(tol: f64) -> Self {
        // levels 3 and 4 can agree to far below their actual error when a
        // singularity sits just outside the interval
        QuadOptions { tol, min_level: 6, max_level: 12 }
    }

    pub fn with_max_level(self, max_level: u32) -> Self {
        QuadOptions { max_level, ..self }
    }
}

#[derive(Clone, Debug)]
pub struct Quad<R> {
    pub value: R,
    pub error_estimate: f64,
    pub levels: u32,
    pub evals: usize,
}

/// Largest abscissa `t` worth visiting for a given mantissa size; integrands
/// with inverse-square-root endpoint behaviour still decay below `2^-bits` there.
fn t_max(bits: usize) -> f64 {
    let s = (bits as f64 + 8.0) * std::f64::consts::LN_2;
    (2.0 * s / std::f64::consts::PI).asinh()
}

/// Double-exponential (tanh-sinh) quadrature of `f` over `[a, b]`.
///
/// The integrand is called as `f(x, x - a, b - x)`; the two distances are
/// computed without cancellation so that endpoint singularities can be
/// evaluated accurately.
pub fn tanh_sinh<R, F>(f: F, a: &R, b: &R, opts: QuadOptions) -> Result<Quad<R>, HpError>
where
    R: Real,
    F: FnMut(&R, &R, &R) -> R,
{
    let width = b.clone() - a.clone();
    tanh_sinh_width(f, a, b, &width, opts)
}

/// As [`tanh_sinh`], with `b - a` supplied by the caller. Use this when the
/// width is known more accurately than the rounded endpoints suggest.
pub fn tanh_sinh_width<R, F>(mut f: F, a: &R, b: &R, width: &R, opts: QuadOptions) -> Result<Quad<R>, HpError>
where
    R: Real,
    F: FnMut(&R, &R, &R) -> R,
{
    let width = width.clone();
    let half = width.clone() * a.lift(0.5);
    let tm = t_max(a.bits());
    let pi_half = a.lift(std::f64::consts::FRAC_PI_2);
    let mut evals = 0usize;

    // Contribution of the node pair at +-t (or the centre when t == 0).
    let mut pair = |t: f64| -> R {
        let tt = a.lift(t);
        let et = tt.exp();
        let emt = a.lift(1.0) / et.clone();
        let sinh = (et.clone() - emt.clone()) * a.lift(0.5);
        let cosh = (et + emt) * a.lift(0.5);
        let s = pi_half.clone() * sinh;
        let u = (a.lift(-2.0) * s).exp();
        let one_u = a.lift(1.0) + u.clone();
        let w = pi_half.clone() * cosh * a.lift(4.0) * u.clone() / (one_u.clone() * one_u.clone());
        let near = half.clone() * a.lift(2.0) * u / one_u;
        if t == 0.0 {
            evals += 1;
            let x = a.clone() + half.clone();
            return f(&x, &half, &half) * w;
        }
        let far = width.clone() - near.clone();
        evals += 2;
        let xr = b.clone() - near.clone();
        let right = f(&xr, &far, &near);
        let xl = a.clone() + near.clone();
        let left = f(&xl, &near, &far);
        (right + left) * w
    };

    let mut sum = pair(0.0);
    let mut k = 1;
    while (k as f64) <= tm {
        sum = sum + pair(k as f64);
        k += 1;
    }
    let mut h = 1.0;
    let mut prev = sum.clone() * half.clone();
    let mut last_change = f64::INFINITY;
    for level in 1..=opts.max_level {
        h /= 2.0;
        let mut j = 1u64;
        loop {
            let t = j as f64 * h;
            if t > tm {
                break;
            }
            sum = sum + pair(t);
            j += 2;
        }
        let cur = sum.clone() * half.clone() * a.lift(h);
        last_change = (cur.to_f64() - prev.to_f64()).abs();
        if level >= opts.min_level && last_change <= opts.tol {
            return Ok(Quad { value: cur, error_estimate: last_change, levels: level, evals });
        }
        prev = cur;
    }
    Err(HpError::NoConvergence { levels: opts.max_level, estimate: last_change })
}

/// `int_a^inf f(u) du` via `u = a + (1 - v)/v`; `f` receives `(u, u - a)`.
pub fn tanh_sinh_to_infinity<R, F>(mut f: F, a: &R, opts: QuadOptions) -> Result<Quad<R>, HpError>
where
    R: Real,
    F: FnMut(&R, &R) -> R,
{
    let zero = a.lift(0.0);
    let one = a.lift(1.0);
    tanh_sinh(
        |v: &R, _, one_minus_v: &R| {
            let offset = one_minus_v.clone() / v.clone();
            let u = a.clone() + offset.clone();
            f(&u, &offset) / (v.clone() * v.clone())
        },
        &zero,
        &one,
        opts,
    )
}
