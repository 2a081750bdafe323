use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::LinError;

pub type Rat = BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `q0 + q1 * Xi_w`. Weight 0 means the entry is purely rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodEntry {
    q0: Rat,
    q1: Rat,
    weight: u32,
}

impl PeriodEntry {
    pub fn zero() -> Self {
        Self::rational(Rat::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    pub fn rational(q: Rat) -> Self {
        PeriodEntry { q0: q, q1: Rat::zero(), weight: 0 }
    }

    pub fn xi(coeff: Rat, weight: u32) -> Self {
        Self::new(Rat::zero(), coeff, weight)
    }

    /// Normalizes so that a vanishing Xi coefficient carries weight 0.
    pub fn new(q0: Rat, q1: Rat, weight: u32) -> Self {
        if q1.is_zero() || weight == 0 {
            assert!(weight != 0 || q1.is_zero(), "weight-0 entry with a Xi coefficient");
            PeriodEntry { q0, q1: Rat::zero(), weight: 0 }
        } else {
            PeriodEntry { q0, q1, weight }
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.q0
    }

    pub fn zeta_coeff(&self) -> &Rat {
        &self.q1
    }

    pub fn zeta_weight(&self) -> u32 {
        self.weight
    }

    pub fn is_rational(&self) -> bool {
        self.weight == 0
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.q0.is_one() && self.q1.is_zero()
    }

    pub fn neg(&self) -> Self {
        PeriodEntry { q0: -self.q0.clone(), q1: -self.q1.clone(), weight: self.weight }
    }

    pub fn add(&self, o: &Self) -> Result<Self, LinError> {
        let weight = match (self.weight, o.weight) {
            (0, w) | (w, 0) => w,
            (a, b) if a == b => a,
            (a, b) => return Err(LinError::WeightMismatch(a, b)),
        };
        Ok(Self::new(&self.q0 + &o.q0, &self.q1 + &o.q1, weight))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, LinError> {
        self.add(&o.neg())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::new(&self.q0 * r, &self.q1 * r, self.weight)
    }

    /// Fails when both factors carry a Xi part: that product leaves the ring.
    pub fn mul(&self, o: &Self) -> Result<Self, LinError> {
        match (self.weight, o.weight) {
            (0, _) => Ok(o.scale(&self.q0)),
            (_, 0) => Ok(self.scale(&o.q0)),
            (a, b) => Err(LinError::XiProduct { left: a, right: b }),
        }
    }
}

impl From<Rat> for PeriodEntry {
    fn from(q: Rat) -> Self {
        PeriodEntry::rational(q)
    }
}

impl fmt::Display for PeriodEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weight == 0 {
            return write!(f, "{}", self.q0);
        }
        if !self.q0.is_zero() {
            write!(f, "{} ", self.q0)?;
            write!(f, "{} ", if self.q1.is_negative() { '-' } else { '+' })?;
            write!(f, "{}*Xi{}", self.q1.abs(), self.weight)
        } else {
            write!(f, "{}*Xi{}", self.q1, self.weight)
        }
    }
}
