use std::collections::BTreeMap;

use exactlin::{rat, Rat};
use hpnum::{bernoulli, zeta, zeta1, BigReal, PrecisionCtx};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::symbolic::{Monomial, Poly, Sym};
use crate::SeriesError;

fn zpoly(terms: &[((i64, i64), &[u32])]) -> Poly {
    terms.iter().fold(Poly::zero(), |acc, ((n, d), zs)| {
        acc.add(&Poly::term(rat(*n, *d), zs.iter().map(|&k| Sym::Zeta(k)).collect()))
    })
}

/// Closed form of `gamma_n` as a polynomial in zeta values, `n = 1..=6`.
pub fn gamma_closed_poly(n: u32) -> Result<Poly, SeriesError> {
    let p = match n {
        1 => zpoly(&[((1, 1), &[1])]),
        2 => zpoly(&[((1, 1), &[2]), ((-1, 2), &[1, 1])]),
        3 => zpoly(&[((2, 1), &[3]), ((-1, 1), &[2, 1]), ((1, 6), &[1, 1, 1])]),
        4 => zpoly(&[((9, 4), &[4]), ((-2, 1), &[3, 1]), ((1, 2), &[2, 1, 1]), ((-1, 24), &[1, 1, 1, 1])]),
        5 => zpoly(&[
            ((6, 1), &[5]),
            ((-9, 4), &[4, 1]),
            ((-2, 1), &[3, 2]),
            ((1, 1), &[3, 1, 1]),
            ((-1, 6), &[2, 1, 1, 1]),
            ((1, 120), &[1, 1, 1, 1, 1]),
        ]),
        6 => zpoly(&[
            ((79, 16), &[6]),
            ((-6, 1), &[5, 1]),
            ((9, 8), &[4, 1, 1]),
            ((-2, 1), &[3, 3]),
            ((2, 1), &[3, 2, 1]),
            ((-1, 3), &[3, 1, 1, 1]),
            ((1, 24), &[2, 1, 1, 1, 1]),
            ((-1, 720), &[1, 1, 1, 1, 1, 1]),
        ]),
        _ => return Err(SeriesError::OutOfRange(n)),
    };
    Ok(p)
}

/// Closed form of `gamma~_n`, `n = 0..=3`.
pub fn gamma_tilde_closed_poly(n: u32) -> Result<Poly, SeriesError> {
    let p = match n {
        0 => Poly::int(1),
        1 => zpoly(&[((1, 1), &[1])]),
        2 => zpoly(&[((1, 1), &[2]), ((1, 2), &[1, 1])]),
        3 => zpoly(&[((2, 1), &[3]), ((1, 1), &[2, 1]), ((1, 6), &[1, 1, 1])]),
        _ => return Err(SeriesError::OutOfRange(n)),
    };
    Ok(p)
}

/// Numerical value of `zeta(n)`, with `zeta(1) = log 4`.
pub fn zeta_value(n: u32, ctx: &PrecisionCtx) -> BigReal {
    if n == 1 {
        zeta1(ctx)
    } else {
        zeta(n, ctx)
    }
}

/// Evaluates a polynomial whose only symbols are zeta values.
pub fn eval_zeta_poly(p: &Poly, ctx: &PrecisionCtx) -> Result<BigReal, SeriesError> {
    if let Some(s) = p.symbols().into_iter().find(|s| !matches!(s, Sym::Zeta(_))) {
        return Err(SeriesError::UnknownConstant(s.to_string()));
    }
    Ok(p.eval(ctx.working_bits, |s| match s {
        Sym::Zeta(n) => zeta_value(n, ctx),
        _ => unreachable!("checked above"),
    }))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// `zeta(2k) / pi^(2k)`, exactly.
pub fn even_zeta_over_pi_pow(k: u32) -> Rat {
    let b = bernoulli(2 * k as usize);
    let sign = if k % 2 == 1 { Rat::one() } else { -Rat::one() };
    sign * b * Rat::from_integer(BigInt::one() << (2 * k - 1)) / Rat::from_integer(factorial(2 * k))
}

/// `zeta(2k) / (2 pi i)^(2k) = -B_2k / (2 (2k)!)`, exactly.
pub fn even_zeta_over_two_pi_i(k: u32) -> Rat {
    -bernoulli(2 * k as usize) / Rat::from_integer(factorial(2 * k) * 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCoeff {
    /// Parts in non-increasing order.
    pub partition: Vec<u32>,
    #[serde(serialize_with = "ser_rat")]
    pub coefficient: Rat,
}

fn ser_rat<S: serde::Serializer>(q: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn partitions(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        partitions(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// Coefficient of `prod zeta(p_j)` in `gamma_d` by the empirical partition rules.
pub fn partition_coeffs(d: u32) -> Result<Vec<PartitionCoeff>, SeriesError> {
    if !(1..=8).contains(&d) {
        return Err(SeriesError::OutOfRange(d));
    }
    let mut parts = vec![];
    partitions(d, d, &mut vec![], &mut parts);
    let c = |p: u32| rat((1i64 << p) - 2, p as i64);
    let sign = |k: usize| if k % 2 == 0 { Rat::one() } else { -Rat::one() };
    let fact = |k: usize| Rat::from_integer(factorial(k as u32));
    Ok(parts
        .into_iter()
        .map(|partition| {
            let ones = partition.iter().filter(|&&p| p == 1).count();
            let rest: Vec<u32> = partition.iter().copied().filter(|&p| p > 1).collect();
            let coefficient = if rest.is_empty() {
                sign(d as usize - 1) / fact(d as usize)
            } else {
                let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
                for &p in &rest {
                    *mult.entry(p).or_default() += 1;
                }
                let denom = mult.values().fold(Rat::one(), |a, &m| a * fact(m));
                let prod = rest.iter().fold(Rat::one(), |a, &p| a * c(p));
                sign(rest.len() - 1) * prod / denom * sign(ones) / fact(ones)
            };
            PartitionCoeff { partition, coefficient }
        })
        .collect())
}

/// The partition coefficients as a zeta polynomial.
pub fn partition_poly(d: u32) -> Result<Poly, SeriesError> {
    Ok(partition_coeffs(d)?.into_iter().fold(Poly::zero(), |acc, pc| {
        acc.add(&Poly::term(pc.coefficient, pc.partition.iter().map(|&k| Sym::Zeta(k)).collect()))
    }))
}

/// One even-zeta product collapsed into a single even zeta value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regrouping {
    pub product: Vec<u32>,
    pub target: u32,
    pub factor: Rat,
}

/// Collapses every product of two or more even zeta values into one `zeta(2K)`,
/// using that each `zeta(2k)` is a rational multiple of `pi^(2k)`.
pub fn reduce_even_products(p: &Poly) -> (Poly, Vec<Regrouping>) {
    let mut out = Poly::zero();
    let mut used = vec![];
    for (m, q) in p.terms() {
        let evens: Vec<u32> = m
            .iter()
            .filter_map(|s| match s {
                Sym::Zeta(k) if k % 2 == 0 => Some(*k),
                _ => None,
            })
            .collect();
        if evens.len() < 2 {
            out = out.add(&Poly::term(q.clone(), m.clone()));
            continue;
        }
        let total: u32 = evens.iter().sum();
        let factor = evens.iter().fold(Rat::one(), |a, &k| a * even_zeta_over_pi_pow(k / 2)) / even_zeta_over_pi_pow(total / 2);
        let mut mono: Monomial = m.iter().copied().filter(|s| !matches!(s, Sym::Zeta(k) if k % 2 == 0)).collect();
        mono.push(Sym::Zeta(total));
        out = out.add(&Poly::term(q * &factor, mono));
        if !used.iter().any(|r: &Regrouping| r.product == evens) {
            used.push(Regrouping { product: evens, target: total, factor });
        }
    }
    (out, used)
}

/// Residual `|prod zeta(2k_i) - factor * zeta(2K)|` of a regrouping identity.
pub fn regrouping_residual(r: &Regrouping, ctx: &PrecisionCtx) -> f64 {
    let lhs = r.product.iter().fold(ctx.one(), |a, &k| &a * &zeta(k, ctx));
    let rhs = &ctx.from_rat(&r.factor) * &zeta(r.target, ctx);
    (&lhs - &rhs).abs().to_f64()
}
