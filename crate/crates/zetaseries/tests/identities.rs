mod common;

use std::sync::OnceLock;

use exactlin::{rat, PeriodEntry};
use hpnum::{pi, BigReal, PrecisionCtx};
use zetaseries::*;

fn ctx() -> PrecisionCtx {
    PrecisionCtx::new(256, 1e-30)
}

fn reduced_table() -> &'static ConstantTable {
    static T: OnceLock<ConstantTable> = OnceLock::new();
    T.get_or_init(|| ConstantTable::compute(&ctx(), &Source::Reduced).unwrap())
}

#[test]
fn beta_delta_on_the_lattice() {
    let lad = Ladders { double: Ladder::powers_of_two(7, 13), quadruple: Ladder::half_octaves(8, 32) };
    let t = ConstantTable::compute(&ctx(), &Source::Lattice(lad)).unwrap();
    let r = beta_delta_identity(&t, 1e-6);
    assert!(r.pass, "{r:?}");
    let r = beta_delta_tilde_identity(&t, 1e-6);
    assert!(r.pass, "{r:?}");
}

#[test]
fn g2_identity_from_one_index_forms() {
    let r = g2_identity(reduced_table(), 1e-8);
    assert!(r.pass, "{r:?}");
    // sanity: the combination is far from zero, so the check is not vacuous
    assert!(r.lhs < -2.7 && r.lhs > -2.8);
}

#[test]
fn region_one_matches_generating_function() {
    let [one, _, _] = region_polys_d3();
    assert_eq!(one.coeffs, common::region1_oracle(3));
    assert_eq!(region1_d6_symbolic().coeffs, common::region1_oracle(6));
}

#[test]
fn d3_polynomial_shape() {
    let p = region_poly_d3_symbolic();
    assert_eq!(p.coeff(3), Poly::constant(rat(-1, 6)));
    assert!(p.coeff(2).is_zero());
    // with beta + delta eliminated the log s coefficient is 2 zeta(2)
    let bd = Poly::var(Sym::Beta).add(&Poly::var(Sym::Delta));
    let via = p.coeff(1).add(&bd).sub(&gammas_to_zetas(&Poly::var(Sym::Gamma(1)).pow(2).scale(&rat(2, 1)).add(&Poly::var(Sym::Gamma(2)))).unwrap());
    assert_eq!(gammas_to_zetas(&via).unwrap(), Poly::var(Sym::Zeta(2)).scale(&rat(2, 1)));
    let t = reduced_table();
    let num = region_poly_d3(t);
    let c0 = num.coeffs[0].to_f64();
    let z3 = zeta_value(3, &ctx()).to_f64();
    assert!((c0 + 6.0 * z3).abs() < 1e-7, "{c0}");
}

#[test]
fn theorem_d3_coefficients() {
    let c = ctx();
    let r = theorem_d3(reduced_table(), &c, &D3Tolerance::default()).unwrap();
    assert_eq!(r.q.clone().unwrap(), rat(-48, 1));
    let exact = r.exact.unwrap();
    assert_eq!(exact[0], PeriodEntry::xi(rat(-48, 1), 3));
    assert_eq!(exact[1], PeriodEntry::rational(rat(-2, 3)));
    assert!(exact[2].is_zero());
    assert_eq!(exact[3], PeriodEntry::rational(rat(-4, 3)));
}

#[test]
fn theorem_d3_rejects_absurd_tolerance() {
    let tol = D3Tolerance { const_rel: 1e-99, ..D3Tolerance::default() };
    match theorem_d3(reduced_table(), &ctx(), &tol) {
        Err(SeriesError::ToleranceExceeded(r)) => assert!(r.iter().any(|(k, _)| k == "l^0")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn d6_top_terms() {
    let r = partial_d6(reduced_table(), 1e-8).unwrap();
    assert_eq!(r.leading, rat(4, 45));
    assert_eq!(r.a40, rat(5, 9));
    assert!(r.ell5.is_zero());
    let g1 = Poly::var(Sym::Gamma(1));
    let expected = g1
        .pow(3)
        .scale(&rat(4, 9))
        .add(&g1.mul(&Poly::var(Sym::Zeta(2))).scale(&rat(1, 3)))
        .add(&Poly::var(Sym::Zeta(3)).scale(&rat(-2, 1)))
        .sub(&g2_combination().scale(&rat(1, 6)));
    assert_eq!(r.bracket, expected);
    assert!(r.bracket_value.abs().to_f64() < 1e-8);
    assert_eq!(region1_d6_zeta5_part().unwrap(), rat(-36, 1));
}

#[test]
fn d6_region_one_is_consistent() {
    let t = reduced_table();
    let p = region1_poly_d6(t);
    assert!((p.coeffs[6].to_f64() - 1.0 / 720.0).abs() < 1e-18);
    // the log eps coefficient evaluated through zeta values agrees with the gamma form
    let via_zeta = eval_zeta_poly(&gammas_to_zetas(&region1_d6_symbolic().coeff(1)).unwrap(), &ctx()).unwrap();
    assert!((&via_zeta - &p.coeffs[1]).abs().to_f64() < 1e-20);
}

#[test]
fn recognize_examples() {
    let c = ctx();
    let zero = c.zero();
    assert_eq!(recognize_rational(&zero, &c.one(), 100).unwrap(), rat(0, 1));
    let p = pi(&c);
    let third = p.div_i64(3);
    assert_eq!(recognize_rational(&third, &p, 1000).unwrap(), rat(1, 3));
    let neg = c.from_rat(&rat(-355, 113));
    assert_eq!(recognize_rational(&neg, &c.one(), 1000).unwrap(), rat(-355, 113));
    let noisy = BigReal::from_f64(0.5, 256).with_extra_err(1e-3);
    assert!(matches!(recognize_rational(&noisy, &c.one(), 1000), Err(SeriesError::InsufficientPrecision { .. })));
    // pi itself is no small rational
    assert!(matches!(recognize_rational(&p, &c.one(), 1000), Err(SeriesError::NoMatch { .. })));
    assert_eq!(best_rational(&rat(314159, 100000), 1000), rat(355, 113));
}
