use serde::Serialize;

use crate::quad::{tanh_sinh, tanh_sinh_width, QuadOptions};
use crate::{consts, li2, li3, BigReal, HpError, PrecisionCtx, Real};

fn check_domain(n: u32, u: f64) -> Result<(), HpError> {
    if n > 3 {
        return Err(HpError::DomainError(format!("f_{n} has no closed form here (n <= 3)")));
    }
    if !(0.0..=1.0).contains(&u) || (n == 0 && u == 0.0) {
        return Err(HpError::DomainError(format!("f_{n}({u}) is outside the domain")));
    }
    Ok(())
}

/// Closed forms of `f_n(u) = h_n(u^2 - 1)` for `n <= 3`.
pub fn f_closed(n: u32, u: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, HpError> {
    let d = &ctx.one() - u;
    f_closed_dist(n, u, &d, ctx)
}

/// As [`f_closed`], with `1 - u` supplied separately to avoid cancellation near `u = 1`.
pub fn f_closed_dist(n: u32, u: &BigReal, one_minus_u: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, HpError> {
    check_domain(n, u.to_f64())?;
    if one_minus_u.is_zero() {
        return Ok(ctx.zero());
    }
    let one = ctx.one();
    match n {
        0 => Ok(one_minus_u / u),
        1 => Ok((&(u + &one).ln() - &consts::log2(ctx)).mul_i64(-2)),
        _ => {
            // u = 2w - 1
            let w = (u + &one).div_i64(2);
            let one_minus_w = one_minus_u.div_i64(2);
            let lw = w.ln();
            if n == 2 {
                return Ok(&li2(&one_minus_w, ctx)?.mul_i64(2) - &(&lw * &lw));
            }
            let l1w = one_minus_w.ln();
            let z2 = consts::zeta(2, ctx);
            let z3 = consts::zeta(3, ctx);
            let lw2 = &lw * &lw;
            let mut acc = &li3(&one_minus_w, ctx)?.mul_i64(2) - &li3(&w, ctx)?.mul_i64(2);
            acc = &acc + &z3.mul_i64(2);
            acc = &acc + &(&z2 * &lw).mul_i64(2);
            acc = &acc - &(&l1w * &lw2);
            acc = &acc - &(&lw2 * &lw).div_i64(3);
            Ok(acc)
        }
    }
}

/// `f_n(u)` from the recursion `f_n(u) = int_u^1 2x/(1-x^2) f_{n-1}(x) dx`, `f_0 = 1/u - 1`,
/// nesting the quadrature all the way down.
pub fn f_iterated<R: Real>(n: u32, u: &R, opts: QuadOptions) -> Result<R, HpError> {
    let one_minus_u = u.lift(1.0) - u.clone();
    check_domain(n, u.to_f64())?;
    f_iter_dist(n, u, &one_minus_u, opts)
}

fn f_iter_dist<R: Real>(n: u32, u: &R, d: &R, opts: QuadOptions) -> Result<R, HpError> {
    if n == 0 {
        return Ok(d.clone() / u.clone());
    }
    if d.to_f64() == 0.0 {
        return Ok(u.lift(0.0));
    }
    let mut failure = None;
    let q = tanh_sinh_width(
        |x: &R, _, dx: &R| match f_iter_dist(n - 1, x, dx, opts) {
            Ok(v) => v * x.lift(2.0) * x.clone() / (dx.clone() * (x.lift(1.0) + x.clone())),
            Err(e) => {
                failure.get_or_insert(e);
                x.lift(0.0)
            }
        },
        u,
        &u.lift(1.0),
        d,
        opts,
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(q.value),
    }
}

/// One recursion step at full precision: integrates the closed form of `f_{n-1}`.
pub fn f_step(n: u32, u: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, HpError> {
    check_domain(n, u.to_f64())?;
    if n == 0 {
        return f_closed(0, u, ctx);
    }
    let one = ctx.one();
    let width = &one - u;
    let mut failure = None;
    let q = tanh_sinh_width(
        |x: &BigReal, _, dx: &BigReal| match f_closed_dist(n - 1, x, dx, ctx) {
            Ok(v) => &(&v * &x.mul_i64(2)) / &(dx * &(&one + x)),
            Err(e) => {
                failure.get_or_insert(e);
                ctx.zero()
            }
        },
        u,
        &one,
        &width,
        QuadOptions::new(ctx.target_abs_error),
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(q.value.with_extra_err(q.error_estimate))
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub w: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolylogReport {
    pub checks: Vec<LemmaCheck>,
    pub max_residual: f64,
}

type Fun<'a> = Box<dyn Fn(&BigReal) -> Result<BigReal, HpError> + 'a>;

/// Checks the two polylogarithm antiderivatives, the `Li_2` reflection, and the
/// derivative rules for `Li_2`, `Li_3`, by finite differences and by quadrature
/// anchored at `w = 1/2`.
pub fn verify_polylog_integral_lemmas(ctx: &PrecisionCtx) -> Result<PolylogReport, HpError> {
    let one = ctx.one();
    let c = *ctx;
    let pairs: Vec<(&str, Fun, Fun)> = vec![
        (
            "int log^2(w)/(w-1)",
            Box::new(|w: &BigReal| {
                let lw = w.ln();
                Ok(&(&lw * &lw) / &(w - &one))
            }),
            Box::new(|w: &BigReal| {
                let lw = w.ln();
                let l1 = (&one - w).ln();
                let t1 = &l1 * &(&lw * &lw);
                let t2 = (&lw * &li2(w, &c)?).mul_i64(2);
                Ok(&(&t1 + &t2) - &li3(w, &c)?.mul_i64(2))
            }),
        ),
        (
            "int log(w)log(1-w)/w",
            Box::new(|w: &BigReal| Ok(&(&w.ln() * &(&one - w).ln()) / w)),
            Box::new(|w: &BigReal| Ok(&li3(w, &c)? - &(&li2(w, &c)? * &w.ln()))),
        ),
        ("d Li2", Box::new(|w: &BigReal| Ok(-(&(&one - w).ln() / w))), Box::new(|w: &BigReal| li2(w, &c))),
        ("d Li3", Box::new(|w: &BigReal| Ok(&li2(w, &c)? / w)), Box::new(|w: &BigReal| li3(w, &c))),
    ];
    let mut checks = Vec::new();
    let h = ctx.from_f64(2f64.powi(-(ctx.working_bits as i32) / 3));
    let half = ctx.from_f64(0.5);
    for (name, g, big_f) in &pairs {
        for &wf in &[0.2, 0.5, 0.8] {
            let w = ctx.from_f64(wf);
            let fd = &(&big_f(&(&w + &h))? - &big_f(&(&w - &h))?) / &h.mul_i64(2);
            let target = g(&w)?;
            checks.push(LemmaCheck { name: format!("{name}: derivative"), w: wf, residual: (&fd - &target).to_f64().abs() });
            if wf != 0.5 {
                let mut failure = None;
                let (lo, hi, sign) = if wf < 0.5 { (&w, &half, -1) } else { (&half, &w, 1) };
                let q = tanh_sinh(
                    |x: &BigReal, _, _| {
                        g(x).unwrap_or_else(|e| {
                            failure.get_or_insert(e);
                            ctx.zero()
                        })
                    },
                    lo,
                    hi,
                    QuadOptions::new(ctx.target_abs_error),
                )?;
                if let Some(e) = failure {
                    return Err(e);
                }
                let delta = &big_f(&w)? - &big_f(&half)?;
                let res = (&q.value.mul_i64(sign) - &delta).to_f64().abs();
                checks.push(LemmaCheck { name: format!("{name}: integral from 1/2"), w: wf, residual: res });
            }
        }
    }
    let z2 = consts::zeta(2, ctx);
    for i in 1..=9 {
        let w = ctx.from_f64(i as f64 / 10.0);
        let wc = &one - &w;
        let lhs = &(&li2(&w, ctx)? + &li2(&wc, ctx)?) + &(&w.ln() * &wc.ln());
        checks.push(LemmaCheck { name: "Li2 reflection".into(), w: i as f64 / 10.0, residual: (&lhs - &z2).to_f64().abs() });
    }
    let max_residual = checks.iter().map(|c| c.residual).fold(0.0, f64::max);
    Ok(PolylogReport { checks, max_residual })
}
