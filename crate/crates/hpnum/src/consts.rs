use std::sync::Mutex;

use astro_float::RoundingMode;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::real::with_consts;
use crate::{BigReal, PrecisionCtx};

const GUARD: usize = 32;

pub fn pi(ctx: &PrecisionCtx) -> BigReal {
    let p = ctx.working_bits + GUARD;
    let v = with_consts(|cc| cc.pi(p, RoundingMode::ToEven));
    BigReal::from_raw(v, 0.0, p).round_to(ctx.working_bits)
}

pub fn log2(ctx: &PrecisionCtx) -> BigReal {
    let p = ctx.working_bits + GUARD;
    let v = with_consts(|cc| cc.ln_2(p, RoundingMode::ToEven));
    BigReal::from_raw(v, 0.0, p).round_to(ctx.working_bits)
}

/// `log 4`, used in place of the divergent `zeta(1)` throughout.
pub fn zeta1(ctx: &PrecisionCtx) -> BigReal {
    log2(ctx).mul_i64(2)
}

/// Riemann zeta at an integer `n >= 2`, via Borwein's accelerated alternating series.
pub fn zeta(n: u32, ctx: &PrecisionCtx) -> BigReal {
    assert!(n >= 2, "zeta(n) needs n >= 2");
    let p = ctx.working_bits + GUARD;
    // 3 / (3 + sqrt 8)^N must drop below 2^-p.
    let terms = ((p as f64) * std::f64::consts::LN_2 / (3.0 + 8f64.sqrt()).ln()).ceil() as usize + 4;
    let d = borwein_d(terms);
    let dn = BigReal::from_bigint(&d[terms], p);
    let mut acc = BigReal::from_i64(0, p);
    for (k, dk) in d.iter().enumerate().take(terms) {
        let num = BigReal::from_bigint(&(dk - &d[terms]), p);
        let den = BigReal::from_i64(k as i64 + 1, p).powi(n);
        let t = &num / &den;
        acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    let eta = -(&acc / &dn);
    let trunc = 3.0 * (3.0 + 8f64.sqrt()).powi(-(terms as i32));
    let two = BigReal::from_i64(2, p);
    let factor = &BigReal::from_i64(1, p) - &two.powi(n - 1).recip();
    (&eta.with_extra_err(trunc) / &factor).round_to(ctx.working_bits)
}

fn borwein_d(n: usize) -> Vec<BigInt> {
    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigRational::zero();
    let nn = BigInt::from(n);
    let fact = |m: usize| -> BigInt { (1..=m).fold(BigInt::one(), |a, x| a * x) };
    for i in 0..=n {
        let t = BigRational::new(fact(n + i - 1) * BigInt::from(4).pow(i as u32), fact(n - i) * fact(2 * i));
        acc += t;
        let dk = &acc * BigRational::from_integer(nn.clone());
        debug_assert!(dk.is_integer());
        out.push(dk.to_integer());
    }
    out
}

static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// Bernoulli numbers with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    let mut cache = BERNOULLI.lock().expect("bernoulli cache");
    while cache.len() <= n {
        let m = cache.len();
        if m == 0 {
            cache.push(BigRational::one());
            continue;
        }
        // sum_{k<=m} C(m+1, k) B_k = 0
        let mut s = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in cache.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        cache.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    cache[n].clone()
}

/// `zeta(-n)` for `n >= 0` as an exact rational.
pub fn zeta_nonpositive(n: usize) -> BigRational {
    let b = bernoulli(n + 1) / BigRational::from_integer(BigInt::from(n + 1));
    if n % 2 == 0 {
        b
    } else {
        -b
    }
}
