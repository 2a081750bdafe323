use std::collections::BTreeMap;
use std::fmt;

use exactlin::{rat, Rat};
use hpnum::BigReal;
use num_traits::{One, Signed, Zero};

/// Symbols appearing in the constant-term bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    /// `zeta(n)`, with `zeta(1)` standing for `log 4`.
    Zeta(u32),
    Gamma(u32),
    GammaTilde(u32),
    Beta,
    Delta,
    Psi,
    Nu,
    NuPrime,
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Zeta(n) => write!(f, "z{n}"),
            Sym::Gamma(n) => write!(f, "g{n}"),
            Sym::GammaTilde(n) => write!(f, "gt{n}"),
            Sym::Beta => write!(f, "beta"),
            Sym::Delta => write!(f, "delta"),
            Sym::Psi => write!(f, "psi"),
            Sym::Nu => write!(f, "nu"),
            Sym::NuPrime => write!(f, "nu'"),
        }
    }
}

/// Sorted multiset of symbols.
pub type Monomial = Vec<Sym>;

/// Polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(q: Rat) -> Self {
        Poly::term(q, vec![])
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rat(n, 1))
    }

    pub fn var(s: Sym) -> Self {
        Poly::term(Rat::one(), vec![s])
    }

    pub fn term(q: Rat, mut mono: Monomial) -> Self {
        mono.sort();
        let mut p = Poly::zero();
        if !q.is_zero() {
            p.terms.insert(mono, q);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &[Sym]) -> Rat {
        let mut m = mono.to_vec();
        m.sort();
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, mono: Monomial, q: Rat) {
        let e = self.terms.entry(mono).or_insert_with(Rat::zero);
        *e += q;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, q) in &o.terms {
            out.insert(m.clone(), q.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&rat(-1, 1)))
    }

    pub fn scale(&self, r: &Rat) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, q)| (m.clone(), q * r)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, q1) in &self.terms {
            for (m2, q2) in &o.terms {
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                m.sort();
                out.insert(m, q1 * q2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::int(1), |acc, _| acc.mul(self))
    }

    /// Replaces every occurrence of `s` by `by`.
    pub fn subst(&self, s: Sym, by: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, q) in &self.terms {
            let k = m.iter().filter(|&&x| x == s).count() as u32;
            let rest: Monomial = m.iter().copied().filter(|&x| x != s).collect();
            out = out.add(&Poly::term(q.clone(), rest).mul(&by.pow(k)));
        }
        out
    }

    pub fn symbols(&self) -> Vec<Sym> {
        let mut v: Vec<Sym> = self.terms.keys().flatten().copied().collect();
        v.sort();
        v.dedup();
        v
    }

    /// Numerical value given a value for each symbol.
    pub fn eval<F: FnMut(Sym) -> BigReal>(&self, prec: usize, mut value: F) -> BigReal {
        let mut cache: BTreeMap<Sym, BigReal> = BTreeMap::new();
        let mut acc = BigReal::from_i64(0, prec);
        for (m, q) in &self.terms {
            let mut t = BigReal::from_rat(q, prec);
            for s in m {
                let v = cache.entry(*s).or_insert_with(|| value(*s));
                t = &t * &*v;
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            let sign = match (i, q.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sign}{}", q.abs())?;
            for s in m {
                write!(f, "*{s}")?;
            }
        }
        Ok(())
    }
}

/// `sum_j c_j L^j` with symbolic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymLogPoly {
    pub coeffs: Vec<Poly>,
}

impl SymLogPoly {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        SymLogPoly { coeffs }
    }

    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &SymLogPoly) -> SymLogPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        SymLogPoly { coeffs: (0..n).map(|j| self.coeff(j).add(&o.coeff(j))).collect() }
    }

    /// Substitutes `L = L' + c` and re-expands.
    pub fn shift(&self, c: &Poly) -> SymLogPoly {
        let n = self.coeffs.len();
        let mut out = vec![Poly::zero(); n];
        for (j, cj) in self.coeffs.iter().enumerate() {
            let mut binom = Rat::one();
            for i in (0..=j).rev() {
                // C(j, i) c^(j - i)
                out[i] = out[i].add(&cj.mul(&c.pow((j - i) as u32)).scale(&binom));
                binom = binom * rat(i as i64, (j - i + 1) as i64);
            }
        }
        SymLogPoly { coeffs: out }
    }

    /// Substitutes a symbol inside every coefficient.
    pub fn subst(&self, s: Sym, by: &Poly) -> SymLogPoly {
        SymLogPoly { coeffs: self.coeffs.iter().map(|c| c.subst(s, by)).collect() }
    }
}
