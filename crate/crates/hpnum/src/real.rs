use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Working precision and the absolute error a caller is aiming for.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionCtx {
    pub working_bits: usize,
    pub target_abs_error: f64,
}

impl Default for PrecisionCtx {
    fn default() -> Self {
        PrecisionCtx { working_bits: 256, target_abs_error: 1e-30 }
    }
}

impl PrecisionCtx {
    pub fn new(working_bits: usize, target_abs_error: f64) -> Self {
        PrecisionCtx { working_bits: working_bits.max(64), target_abs_error }
    }

    /// Same target, twice the bits.
    pub fn doubled(&self) -> Self {
        PrecisionCtx { working_bits: 2 * self.working_bits, ..*self }
    }

    pub fn unit_roundoff(&self) -> f64 {
        2f64.powi(-(self.working_bits as i32))
    }

    pub fn from_f64(&self, x: f64) -> BigReal {
        BigReal::from_f64(x, self.working_bits)
    }

    pub fn from_i64(&self, n: i64) -> BigReal {
        BigReal::from_i64(n, self.working_bits)
    }

    pub fn from_rat(&self, q: &BigRational) -> BigReal {
        BigReal::from_rat(q, self.working_bits)
    }

    pub fn zero(&self) -> BigReal {
        self.from_i64(0)
    }

    pub fn one(&self) -> BigReal {
        self.from_i64(1)
    }
}

/// A binary floating-point value together with a bound on its absolute error.
#[derive(Clone)]
pub struct BigReal {
    v: BigFloat,
    err: f64,
    prec: usize,
}

impl BigReal {
    fn wrap(v: BigFloat, err: f64, prec: usize) -> Self {
        let round = ulp_of(&v, prec);
        BigReal { v, err: err + round, prec }
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        BigReal { v: BigFloat::from_f64(x, prec), err: 0.0, prec }
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        let v = BigFloat::from_i64(n, prec);
        let err = if n.unsigned_abs() < (1u64 << 53) || prec >= 64 { 0.0 } else { ulp_of(&v, prec) };
        BigReal { v, err, prec }
    }

    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        let v = with_consts(|cc| BigFloat::parse(&n.to_string(), Radix::Dec, prec + 64, RM, cc));
        let bits = n.bits() as usize;
        let mut out = BigReal { v, err: 0.0, prec };
        if bits > prec {
            out.err = ulp_of(&out.v, prec);
        }
        out.round_to(prec)
    }

    pub fn from_rat(q: &BigRational, prec: usize) -> Self {
        let hi = prec + 64;
        let n = BigReal::from_bigint(q.numer(), hi);
        let d = BigReal::from_bigint(q.denom(), hi);
        (&n / &d).round_to(prec)
    }

    /// Parses a decimal literal; the result is treated as exact.
    pub fn parse(s: &str, prec: usize) -> Self {
        let v = with_consts(|cc| BigFloat::parse(s, Radix::Dec, prec, RM, cc));
        BigReal { v, err: 0.0, prec }
    }

    pub(crate) fn from_raw(v: BigFloat, err: f64, prec: usize) -> Self {
        BigReal::wrap(v, err, prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn err(&self) -> f64 {
        self.err
    }

    /// Widens the error bound by `extra`.
    pub fn with_extra_err(mut self, extra: f64) -> Self {
        self.err += extra.abs();
        self
    }

    pub fn round_to(&self, prec: usize) -> Self {
        let mut v = self.v.clone();
        let _ = v.set_precision(prec, RM);
        BigReal::wrap(v, self.err, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    /// Upper bound for `|self|` from the binary exponent.
    pub fn mag(&self) -> f64 {
        match self.v.exponent() {
            Some(e) if !self.v.is_zero() => 2f64.powi(e),
            _ => 0.0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return if self.v.is_nan() { f64::NAN } else if self.v.is_inf_neg() { f64::NEG_INFINITY } else { f64::INFINITY };
        };
        if self.v.is_zero() || words.is_empty() {
            return 0.0;
        }
        let n = words.len();
        let mut m = words[n - 1] as f64 * 2f64.powi(-64);
        if n > 1 {
            m += words[n - 2] as f64 * 2f64.powi(-128);
        }
        let x = m * 2f64.powi(e);
        if sign == Sign::Neg {
            -x
        } else {
            x
        }
    }

    pub fn abs(&self) -> Self {
        BigReal { v: self.v.abs(), err: self.err, prec: self.prec }
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative()
    }

    pub fn sqrt(&self) -> Self {
        let v = self.v.sqrt(self.prec, RM);
        let x = self.to_f64();
        let e = if x > 2.0 * self.err { self.err / x.sqrt() } else { self.err.sqrt() };
        BigReal::wrap(v, e, self.prec)
    }

    pub fn exp(&self) -> Self {
        let v = with_consts(|cc| self.v.exp(self.prec, RM, cc));
        let scale = (self.err.exp() - 1.0).max(self.err);
        let r = BigReal { v, err: 0.0, prec: self.prec };
        let e = r.mag() * scale;
        BigReal::wrap(r.v, e, self.prec)
    }

    pub fn ln(&self) -> Self {
        let v = with_consts(|cc| self.v.ln(self.prec, RM, cc));
        let x = self.to_f64();
        let e = if x > self.err { self.err / (x - self.err) } else { f64::INFINITY };
        BigReal::wrap(v, e, self.prec)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = BigReal::from_i64(1, self.prec);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn recip(&self) -> Self {
        &BigReal::from_i64(1, self.prec) / self
    }

    pub fn mul_i64(&self, n: i64) -> Self {
        self * &BigReal::from_i64(n, self.prec)
    }

    pub fn div_i64(&self, n: i64) -> Self {
        self / &BigReal::from_i64(n, self.prec)
    }

    pub fn min_prec(&self, o: &Self) -> usize {
        self.prec.min(o.prec)
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.v.is_zero() {
            return "0".into();
        }
        let bits = ((digits as f64) * std::f64::consts::LOG2_10).ceil() as usize + 8;
        let mut v = self.v.clone();
        let _ = v.set_precision(bits.min(self.prec.max(64)), RM);
        let s = with_consts(|cc| v.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        trim_decimal(&s, digits)
    }

    pub fn cmp_value(&self, o: &Self) -> Ordering {
        match self.v.cmp(&o.v) {
            Some(c) if c < 0 => Ordering::Less,
            Some(c) if c > 0 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

fn ulp_of(v: &BigFloat, prec: usize) -> f64 {
    match v.exponent() {
        Some(e) if !v.is_zero() => 2f64.powi(e - prec as i32),
        _ => 0.0,
    }
}

// astro-float prints `1.2345e+3`-style mantissas; cut to the requested digits.
fn trim_decimal(s: &str, digits: usize) -> String {
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.trim_start_matches('+').parse::<i64>().unwrap_or(0)),
        None => (s, 0),
    };
    let (sign, mant) = mant.strip_prefix('-').map(|m| ("-", m)).unwrap_or(("", mant));
    let digits_only: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = mant.find('.').unwrap_or(mant.len()) as i64;
    let lead = digits_only.chars().take_while(|&c| c == '0').count() as i64;
    let all: Vec<u8> = digits_only.bytes().skip(lead as usize).map(|b| b - b'0').collect();
    if all.is_empty() {
        return "0".into();
    }
    let mut e10 = point + exp - lead - 1;
    let mut kept: Vec<u8> = all.iter().copied().take(digits.max(1)).collect();
    if all.get(kept.len()).is_some_and(|&d| d >= 5) {
        let mut i = kept.len();
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                e10 += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let sig: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
    let (first, rest) = sig.split_at(1);
    let rest = rest.trim_end_matches('0');
    if rest.is_empty() {
        format!("{sign}{first}e{e10}")
    } else {
        format!("{sign}{first}.{rest}e{e10}")
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (+/- {:.1e})", self.to_decimal(40), self.err)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(30);
        write!(f, "{}", self.to_decimal(digits))
    }
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, o: &BigReal) -> BigReal {
        let p = self.min_prec(o);
        BigReal::wrap(self.v.add(&o.v, p, RM), self.err + o.err, p)
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, o: &BigReal) -> BigReal {
        let p = self.min_prec(o);
        BigReal::wrap(self.v.sub(&o.v, p, RM), self.err + o.err, p)
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, o: &BigReal) -> BigReal {
        let p = self.min_prec(o);
        let e = self.mag() * o.err + o.mag() * self.err + self.err * o.err;
        BigReal::wrap(self.v.mul(&o.v, p, RM), e, p)
    }
}

impl Div for &BigReal {
    type Output = BigReal;
    fn div(self, o: &BigReal) -> BigReal {
        let p = self.min_prec(o);
        let v = self.v.div(&o.v, p, RM);
        let q = BigReal { v, err: 0.0, prec: p };
        // |b| >= 2^(e-1) for the normalized mantissa.
        let b_low = o.mag() / 2.0;
        let e = if b_low > o.err { (self.err + q.mag() * o.err) / (b_low - o.err) } else { f64::INFINITY };
        BigReal::wrap(q.v, e, p)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { v: BigFloat::neg(&self.v), err: self.err, prec: self.prec }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr for BigReal {
            type Output = BigReal;
            fn $f(self, o: BigReal) -> BigReal {
                (&self).$f(&o)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $f(self, o: &BigReal) -> BigReal {
                (&self).$f(o)
            }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $f(self, o: BigReal) -> BigReal {
                self.$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

/// Scalar field used by the generic quadrature and iterated-integral code.
pub trait Real: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self> {
    /// A constant at the same precision as `self`.
    fn lift(&self, x: f64) -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn to_f64(&self) -> f64;
    fn bits(&self) -> usize;
}

impl Real for f64 {
    fn lift(&self, x: f64) -> Self {
        x
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn bits(&self) -> usize {
        53
    }
}

impl Real for BigReal {
    fn lift(&self, x: f64) -> Self {
        BigReal::from_f64(x, self.prec)
    }
    fn sqrt(&self) -> Self {
        BigReal::sqrt(self)
    }
    fn exp(&self) -> Self {
        BigReal::exp(self)
    }
    fn ln(&self) -> Self {
        BigReal::ln(self)
    }
    fn to_f64(&self) -> f64 {
        BigReal::to_f64(self)
    }
    fn bits(&self) -> usize {
        self.prec
    }
}
