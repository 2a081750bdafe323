use exactlin::Rat;
use hpnum::BigReal;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::SeriesError;

/// Slack allowed between the residual and the input error bound.
const RESIDUAL_FACTOR: f64 = 10.0;

/// Exact rational equal to the decimal rendering of `x`.
fn to_rat(x: &BigReal) -> Rat {
    let digits = (x.precision() as f64 * 0.30103) as usize + 4;
    let s = x.to_decimal(digits);
    let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let exp: i64 = exp.parse().expect("decimal exponent");
    let neg = mant.starts_with('-');
    let mant = mant.trim_start_matches('-');
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let num: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
    let shift = exp - frac.len() as i64;
    let ten = BigInt::from(10);
    let mut q = if shift >= 0 {
        Rat::from_integer(num * num_traits::pow(ten, shift as usize))
    } else {
        Rat::new(num, num_traits::pow(ten, (-shift) as usize))
    };
    if neg {
        q = -q;
    }
    q
}

/// Best rational approximation of `y` with denominator at most `max_den`.
pub fn best_rational(y: &Rat, max_den: u64) -> Rat {
    let max_den = BigInt::from(max_den.max(1));
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let mut r = y.clone();
    loop {
        let a = r.floor().to_integer();
        let q2 = &a * &q1 + &q0;
        if q2 > max_den {
            // largest admissible semiconvergent, if it beats the last convergent
            let k = (&max_den - &q0).div_floor(&q1);
            let semi = Rat::new(&k * &p1 + &p0, &k * &q1 + &q0);
            let conv = Rat::new(p1.clone(), q1.clone());
            return if (&semi - y).abs() < (&conv - y).abs() { semi } else { conv };
        }
        let p2 = &a * &p1 + &p0;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = &r - Rat::from_integer(a);
        if frac.is_zero() {
            return Rat::new(p1, q1);
        }
        r = frac.recip();
    }
}

/// Recognizes `x / base` as a rational with denominator at most `max_den`.
pub fn recognize_rational(x: &BigReal, base: &BigReal, max_den: u64) -> Result<Rat, SeriesError> {
    if x.is_zero() && x.err() == 0.0 {
        return Ok(Rat::zero());
    }
    let y = x / base;
    let ulp = 2f64.powi(-(y.precision() as i32) + 8) * y.mag().max(1.0);
    let err = y.err() + ulp;
    let bound = 1.0 / (2.0 * (max_den as f64).powi(2));
    if err >= bound {
        return Err(SeriesError::InsufficientPrecision { err, max_den });
    }
    let yq = to_rat(&y);
    let best = best_rational(&yq, max_den);
    let residual = (&yq - &best).abs().to_f64().unwrap_or(f64::INFINITY);
    if residual > RESIDUAL_FACTOR * err {
        return Err(SeriesError::NoMatch { max_den, residual });
    }
    Ok(best)
}
