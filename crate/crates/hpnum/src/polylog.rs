use crate::{consts, BigReal, HpError, PrecisionCtx};

/// `Li_2(w)` for `w` in `[0, 1]`.
pub fn li2(w: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, HpError> {
    polylog(2, w, ctx)
}

/// `Li_3(w)` for `w` in `[0, 1]`.
pub fn li3(w: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, HpError> {
    polylog(3, w, ctx)
}

fn polylog(s: u32, w: &BigReal, ctx: &PrecisionCtx) -> Result<BigReal, HpError> {
    let x = w.to_f64();
    if !(0.0..=1.0).contains(&x) {
        return Err(HpError::DomainError(format!("Li_{s} argument {x} outside [0, 1]")));
    }
    let input_err = w.err();
    let w = w.round_to(ctx.working_bits + 32);
    let inner = PrecisionCtx::new(ctx.working_bits + 32, ctx.target_abs_error);
    let v = if x == 0.0 {
        inner.zero()
    } else if x == 1.0 {
        consts::zeta(s, &inner)
    } else if x <= 0.5 {
        power_series(s, &w, &inner)
    } else {
        log_series(s, &w, &inner)
    };
    // Lipschitz constant of Li_s on [0, 1) is bounded by -log(1-w)/w resp. Li_2(w)/w.
    let lip = if s == 2 { (-(1.0 - x).ln() / x.max(1e-300)).max(1.0) } else { 2.0 };
    Ok(v.round_to(ctx.working_bits).with_extra_err(lip * input_err))
}

// sum w^k / k^s, with geometric tail bound.
fn power_series(s: u32, w: &BigReal, ctx: &PrecisionCtx) -> BigReal {
    let x = w.to_f64();
    let eps = 2f64.powi(-(ctx.working_bits as i32));
    let mut acc = ctx.zero();
    let mut pw = w.clone();
    let mut k = 1i64;
    loop {
        let t = &pw / &ctx.from_i64(k).powi(s);
        acc = &acc + &t;
        let bound = t.to_f64().abs() * x / (1.0 - x);
        if bound < eps * 1e-3 || k > 100_000 {
            return acc.with_extra_err(bound);
        }
        k += 1;
        pw = &pw * w;
    }
}

// Li_s(e^mu) = mu^(s-1)/(s-1)! (H_{s-1} - log(-mu)) + sum_{k != s-1} zeta(s-k) mu^k / k!, |mu| < 2 pi.
fn log_series(s: u32, w: &BigReal, ctx: &PrecisionCtx) -> BigReal {
    let mu = w.ln();
    let m = mu.to_f64().abs();
    let r = m / (2.0 * std::f64::consts::PI);
    let eps = 2f64.powi(-(ctx.working_bits as i32));
    let s_us = s as usize;
    let mut acc = ctx.zero();
    let mut pw = ctx.one();
    let mut fact = ctx.one();
    let mut k = 0usize;
    loop {
        if k > 0 {
            pw = &pw * &mu;
            fact = fact.mul_i64(k as i64);
        }
        let term = if k + 1 == s_us {
            let harmonic = (1..s_us).fold(ctx.zero(), |a, j| &a + &ctx.one().div_i64(j as i64));
            let lg = (-&mu).ln();
            &(&pw / &fact) * &(&harmonic - &lg)
        } else if k < s_us {
            &(&consts::zeta(s - k as u32, ctx) * &pw) / &fact
        } else {
            &(&ctx.from_rat(&consts::zeta_nonpositive(k - s_us)) * &pw) / &fact
        };
        acc = &acc + &term;
        if k > s_us + 2 {
            let tail = 4.0 * (2.0 * std::f64::consts::PI).powi(s as i32 - 1) * r.powi(k as i32 + 1) / (1.0 - r);
            if tail < eps * 1e-3 {
                return acc.with_extra_err(tail);
            }
        }
        k += 1;
    }
}
