use exactlin::{rat, unipotent_log, PeriodEntry, Rat, RatMatrix};
use num_traits::{One, Zero};

use crate::coh::coh_mul_entries;
use crate::{coh_mul, gamma_hat, todd_class, CicyInvariants, CohClass, MirrorError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sheaf {
    Structure,
    Hyperplane,
    Line,
    Point,
}

/// A numerical K-class, stored through its Chern character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClassCh {
    pub ch: CohClass,
}

impl KClassCh {
    pub fn dual(&self) -> Self {
        KClassCh { ch: self.ch.dual() }
    }

    fn combo(terms: &[(&Rat, &KClassCh)]) -> Self {
        let ch = terms.iter().fold(CohClass::zero(), |acc, (r, k)| acc.add(&k.ch.scale(r)));
        KClassCh { ch }
    }
}

/// `O_L` is taken with `ch = L - p`; this is the sign for which the
/// `xi`-basis below is symplectic and the limiting periods take the expected form.
pub fn structure_sheaf_ch(kind: Sheaf, m: &Rat) -> KClassCh {
    let ch = match kind {
        Sheaf::Structure => CohClass::one(),
        Sheaf::Hyperplane => CohClass::new(Rat::zero(), Rat::one(), -m / rat(2, 1), m / rat(6, 1)),
        Sheaf::Line => CohClass::new(Rat::zero(), Rat::zero(), Rat::one(), -Rat::one()),
        Sheaf::Point => CohClass::p(),
    };
    KClassCh { ch }
}

/// `<x, y> = int ch(x^dual) ch(y) Td`.
pub fn mukai_pairing(x: &KClassCh, y: &KClassCh, inv: &CicyInvariants) -> Rat {
    let prod = coh_mul(&x.dual().ch, &y.ch, &inv.m);
    coh_mul(&prod, &todd_class(inv), &inv.m).integral().clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
}

/// `A = B = C = D = 0`, `F = -1`, `E = -(a + 2m)/12`.
pub fn normalized_params(inv: &CicyInvariants) -> BasisParams {
    BasisParams {
        a: Rat::zero(),
        b: Rat::zero(),
        c: Rat::zero(),
        d: Rat::zero(),
        e: -(&inv.a + &inv.m * rat(2, 1)) / rat(12, 1),
        f: -Rat::one(),
    }
}

/// `xi_1 = O + A O_H + B O_L + C O_p`, `xi_2 = O_H + D O_L + E O_p`, `xi_3 = -O_L + F O_p`, `xi_4 = O_p`.
pub fn xi_basis(inv: &CicyInvariants, p: &BasisParams) -> [KClassCh; 4] {
    let s = |k| structure_sheaf_ch(k, &inv.m);
    let (o, oh, ol, op) = (s(Sheaf::Structure), s(Sheaf::Hyperplane), s(Sheaf::Line), s(Sheaf::Point));
    let one = Rat::one();
    [
        KClassCh::combo(&[(&one, &o), (&p.a, &oh), (&p.b, &ol), (&p.c, &op)]),
        KClassCh::combo(&[(&one, &oh), (&p.d, &ol), (&p.e, &op)]),
        KClassCh::combo(&[(&-one.clone(), &ol), (&p.f, &op)]),
        op,
    ]
}

pub fn gram(basis: &[KClassCh; 4], inv: &CicyInvariants) -> RatMatrix {
    let mut g = RatMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            g.set(i, j, PeriodEntry::rational(mukai_pairing(&basis[i], &basis[j], inv)));
        }
    }
    g
}

fn check_constraints(inv: &CicyInvariants, p: &BasisParams) -> Result<(), MirrorError> {
    let c1 = Rat::one() + &p.f + &p.a;
    if !c1.is_zero() {
        return Err(MirrorError::ConstraintViolated(format!("1+F+A = {c1}")));
    }
    let c2 = (&inv.a + &inv.m * rat(2, 1)) / rat(12, 1) - &p.d + &p.e - &p.a * &p.d + &p.b;
    if !c2.is_zero() {
        return Err(MirrorError::ConstraintViolated(format!("(a+2m)/12-D+E-AD+B = {c2}")));
    }
    Ok(())
}

/// Limiting basis `gamma_3, .., gamma_0` as coordinates in `(e3, e2, e1, e0)`,
/// where `e3 = 1`, `e2 = H`, `e1 = -L`, `e0 = p`.
pub fn gamma_lim_basis(inv: &CicyInvariants, p: &BasisParams, enforce: bool) -> Result<Vec<Vec<PeriodEntry>>, MirrorError> {
    if enforce {
        check_constraints(inv, p)?;
    }
    let g = gamma_hat(inv);
    Ok(xi_basis(inv, p)
        .iter()
        .map(|xi| {
            let [c0, c1, c2, c3] = coh_mul_entries(&g, &xi.ch, &inv.m);
            vec![c0, c1, c2.neg(), c3]
        })
        .collect())
}

/// Columns express each `e_i` in the normalized limiting basis.
pub fn omega_lim(inv: &CicyInvariants) -> Result<RatMatrix, MirrorError> {
    let cols = gamma_lim_basis(inv, &normalized_params(inv), true)?;
    let mut g = RatMatrix::zeros(4, 4);
    for (j, col) in cols.iter().enumerate() {
        for (i, e) in col.iter().enumerate() {
            g.set(i, j, e.clone());
        }
    }
    Ok(g.unit_lower_inverse()?)
}

fn ch_matrix(classes: &[CohClass]) -> RatMatrix {
    let mut x = RatMatrix::zeros(4, classes.len());
    for (j, c) in classes.iter().enumerate() {
        for i in 0..4 {
            x.set(i, j, PeriodEntry::rational(c.c[i].clone()));
        }
    }
    x
}

/// `O(-H) tensor` written in the normalized `xi`-basis.
#[allow(non_snake_case)]
pub fn monodromy_T(inv: &CicyInvariants) -> Result<RatMatrix, MirrorError> {
    let basis = xi_basis(inv, &normalized_params(inv));
    let exp_neg_h = CohClass::new(Rat::one(), -Rat::one(), &inv.m / rat(2, 1), -&inv.m / rat(6, 1));
    let twisted: Vec<CohClass> = basis.iter().map(|k| coh_mul(&exp_neg_h, &k.ch, &inv.m)).collect();
    let plain: Vec<CohClass> = basis.iter().map(|k| k.ch.clone()).collect();
    Ok(ch_matrix(&plain).inverse()?.mul(&ch_matrix(&twisted))?)
}

#[allow(non_snake_case)]
pub fn nilpotent_N(inv: &CicyInvariants) -> Result<RatMatrix, MirrorError> {
    Ok(unipotent_log(&monodromy_T(inv)?)?)
}
