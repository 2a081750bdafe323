#![allow(dead_code)]

use exactlin::{rat, Rat};
use zetaseries::{Poly, Sym};

/// Truncated power series in `s` with symbolic coefficients.
pub type Series = Vec<Poly>;

pub fn series_mul(a: &Series, b: &Series, n: usize) -> Series {
    (0..=n)
        .map(|k| (0..=k).fold(Poly::zero(), |acc, i| acc.add(&a[i].mul(&b[k - i]))))
        .collect()
}

/// `exp(f)` for `f` with zero constant term, via `n g_n = sum k f_k g_(n-k)`.
pub fn series_exp(f: &Series, n: usize) -> Series {
    let mut g = vec![Poly::int(1)];
    for m in 1..=n {
        let mut acc = Poly::zero();
        for k in 1..=m {
            acc = acc.add(&f[k].mul(&g[m - k]).scale(&rat(k as i64, 1)));
        }
        g.push(acc.scale(&rat(1, m as i64)));
    }
    g
}

/// `phi(s) = zeta(1) s + sum_{n >= 2} (-1)^(n+1) (2^n - 2) zeta(n) s^n / n`.
pub fn phi(n: usize) -> Series {
    let mut f = vec![Poly::zero(), Poly::var(Sym::Zeta(1))];
    for k in 2..=n {
        let sign = if k % 2 == 0 { -1 } else { 1 };
        f.push(Poly::var(Sym::Zeta(k as u32)).scale(&rat(sign * ((1 << k) - 2), k as i64)));
    }
    f
}

/// `gamma_n = (-1)^(n-1) [s^n] exp(phi)`.
pub fn gamma_oracle(n: usize) -> Poly {
    let g = series_exp(&phi(n), n);
    g[n].scale(&rat(if n % 2 == 1 { 1 } else { -1 }, 1))
}

/// `gamma~_n = (-1)^n [s^n] exp(-phi)`.
pub fn gamma_tilde_oracle(n: usize) -> Poly {
    let neg: Series = phi(n).iter().map(|p| p.scale(&rat(-1, 1))).collect();
    let g = series_exp(&neg, n);
    g[n].scale(&rat(if n % 2 == 0 { 1 } else { -1 }, 1))
}

/// Region (I) polynomial in `log eps`: coefficient of `log^j` is
/// `(-1)^j / j! [s^(d-j)] G(s)^d` with `G = 1 + sum (-1)^(n-1) gamma_n s^n`.
pub fn region1_oracle(d: usize) -> Vec<Poly> {
    let g: Series = (0..=d)
        .map(|n| if n == 0 { Poly::int(1) } else { Poly::var(Sym::Gamma(n as u32)).scale(&rat(if n % 2 == 1 { 1 } else { -1 }, 1)) })
        .collect();
    let mut gd: Series = std::iter::once(Poly::int(1)).chain((1..=d).map(|_| Poly::zero())).collect();
    for _ in 0..d {
        gd = series_mul(&gd, &g, d);
    }
    let mut fact = Rat::from_integer(1.into());
    (0..=d)
        .map(|j| {
            if j > 0 {
                fact *= rat(j as i64, 1);
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            gd[d - j].scale(&(rat(sign, 1) / fact.clone()))
        })
        .collect()
}
