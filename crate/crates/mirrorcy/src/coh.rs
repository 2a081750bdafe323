use exactlin::{rat, PeriodEntry, Rat};
use num_traits::Zero;

use crate::CicyInvariants;

/// Even cohomology class `c0 + c1 H + c2 L + c3 p` of a CY 3-fold with `H^2 = m L`, `H L = p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    pub c: [Rat; 4],
}

impl CohClass {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        CohClass { c: [c0, c1, c2, c3] }
    }

    fn basis(i: usize) -> Self {
        let mut c: [Rat; 4] = Default::default();
        c[i] = rat(1, 1);
        CohClass { c }
    }

    pub fn zero() -> Self {
        CohClass { c: Default::default() }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn h() -> Self {
        Self::basis(1)
    }

    pub fn l() -> Self {
        Self::basis(2)
    }

    pub fn p() -> Self {
        Self::basis(3)
    }

    pub fn add(&self, o: &Self) -> Self {
        CohClass { c: std::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CohClass { c: std::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CohClass { c: std::array::from_fn(|i| &self.c[i] * r) }
    }

    /// Dual of the underlying K-class: odd-degree pieces change sign.
    pub fn dual(&self) -> Self {
        let [a, b, c, d] = self.c.clone();
        CohClass::new(a, -b, c, -d)
    }

    /// Degree-6 part, i.e. the integral over the 3-fold.
    pub fn integral(&self) -> &Rat {
        &self.c[3]
    }
}

// Structure constants: basis_i * basis_j = coeff * basis_k.
fn product_rule(i: usize, j: usize, m: &Rat) -> Option<(usize, Rat)> {
    match (i.min(j), i.max(j)) {
        (0, k) => Some((k, rat(1, 1))),
        (1, 1) => Some((2, m.clone())),
        (1, 2) => Some((3, rat(1, 1))),
        _ => None,
    }
}

pub fn coh_mul(x: &CohClass, y: &CohClass, m: &Rat) -> CohClass {
    let mut out = CohClass::zero();
    for i in 0..4 {
        for j in 0..4 {
            if x.c[i].is_zero() || y.c[j].is_zero() {
                continue;
            }
            if let Some((k, s)) = product_rule(i, j, m) {
                out.c[k] += &x.c[i] * &y.c[j] * s;
            }
        }
    }
    out
}

/// Product of a class with `PeriodEntry` coefficients and a rational class.
pub(crate) fn coh_mul_entries(x: &[PeriodEntry; 4], y: &CohClass, m: &Rat) -> [PeriodEntry; 4] {
    let mut out: [PeriodEntry; 4] = std::array::from_fn(|_| PeriodEntry::zero());
    for i in 0..4 {
        for j in 0..4 {
            if let Some((k, s)) = product_rule(i, j, m) {
                let term = x[i].scale(&(&y.c[j] * s));
                out[k] = out[k].add(&term).expect("Gamma-hat has a single Xi weight");
            }
        }
    }
    out
}

pub fn todd_class(inv: &CicyInvariants) -> CohClass {
    CohClass::new(rat(1, 1), Rat::zero(), &inv.a / rat(12, 1), Rat::zero())
}

pub fn chern_character(inv: &CicyInvariants) -> CohClass {
    CohClass::new(rat(3, 1), Rat::zero(), -inv.a.clone(), &inv.b / rat(2, 1))
}

/// `1 + (a/24) L - b Xi_3 p`, coefficients in the basis `(1, H, L, p)`.
pub fn gamma_hat(inv: &CicyInvariants) -> [PeriodEntry; 4] {
    [
        PeriodEntry::one(),
        PeriodEntry::zero(),
        PeriodEntry::rational(&inv.a / rat(24, 1)),
        PeriodEntry::xi(-inv.b.clone(), 3),
    ]
}
