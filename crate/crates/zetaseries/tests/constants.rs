mod common;

use exactlin::rat;
use hpnum::PrecisionCtx;
use zetaseries::*;

fn ctx() -> PrecisionCtx {
    PrecisionCtx::new(256, 1e-30)
}

#[test]
fn gamma_closed_forms_match_generating_function() {
    for n in 1..=6 {
        assert_eq!(gamma_closed_poly(n).unwrap(), reduce_even_products(&common::gamma_oracle(n as usize)).0, "gamma_{n}");
    }
    for n in 0..=3 {
        assert_eq!(gamma_tilde_closed_poly(n).unwrap(), reduce_even_products(&common::gamma_tilde_oracle(n as usize)).0, "gamma~_{n}");
    }
}

#[test]
fn gamma_direct_matches_closed() {
    let ctx = ctx();
    for n in 1..=6 {
        let d = gamma_n(n, Mode::Direct, &ctx).unwrap();
        let c = gamma_n(n, Mode::Closed, &ctx).unwrap();
        let r = (&d - &c).abs().to_f64();
        assert!(r < 1e-10, "gamma_{n}: {r:e}");
        assert!(r <= d.err(), "gamma_{n}: residual {r:e} outside error bar {:e}", d.err());
    }
    for n in 0..=3 {
        let d = gamma_tilde_n(n, Mode::Direct, &ctx).unwrap();
        let c = gamma_tilde_n(n, Mode::Closed, &ctx).unwrap();
        assert!((&d - &c).abs().to_f64() < 1e-10, "gamma~_{n}");
    }
}

#[test]
fn gamma_small_cases() {
    let ctx = ctx();
    let g1 = gamma_n(1, Mode::Closed, &ctx).unwrap();
    assert!((g1.to_f64() - 4f64.ln()).abs() < 1e-15);
    assert!(g1.exp().to_f64() - 4.0 < 1e-14);
    let gt0 = gamma_tilde_n(0, Mode::Direct, &ctx).unwrap();
    assert!((gt0.to_f64() - 1.0).abs() < 1e-10);
    assert!(gamma_n(0, Mode::Closed, &ctx).is_err());
    assert!(gamma_n(7, Mode::Direct, &ctx).is_err());
    assert!(gamma_tilde_n(4, Mode::Closed, &ctx).is_err());
}

fn coeff_of(d: u32, parts: &[u32]) -> exactlin::Rat {
    partition_coeffs(d).unwrap().into_iter().find(|p| p.partition == parts).unwrap().coefficient
}

#[test]
fn partition_examples() {
    let one = partition_coeffs(1).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].coefficient, rat(1, 1));
    assert_eq!(coeff_of(2, &[2]), rat(1, 1));
    assert_eq!(coeff_of(2, &[1, 1]), rat(-1, 2));
    assert_eq!(coeff_of(4, &[4]), rat(7, 2));
    assert_eq!(coeff_of(4, &[2, 2]), rat(-1, 2));
    assert_eq!(coeff_of(6, &[6]), rat(31, 3));
    assert_eq!(coeff_of(6, &[4, 2]), rat(-7, 2));
    assert_eq!(coeff_of(6, &[2, 2, 2]), rat(1, 6));
    // partition counts
    let counts: Vec<usize> = (1..=8).map(|d| partition_coeffs(d).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    assert!(partition_coeffs(0).is_err());
    assert!(partition_coeffs(9).is_err());
}

#[test]
fn partition_rules_reproduce_closed_forms() {
    let ctx = ctx();
    for d in 1..=6 {
        let (reduced, regroupings) = reduce_even_products(&partition_poly(d).unwrap());
        assert_eq!(reduced, gamma_closed_poly(d).unwrap(), "gamma_{d}");
        for r in &regroupings {
            assert!(regrouping_residual(r, &ctx) < 1e-20, "{r:?}");
        }
        let direct = eval_zeta_poly(&partition_poly(d).unwrap(), &ctx).unwrap();
        let closed = gamma_n(d, Mode::Closed, &ctx).unwrap();
        assert!((&direct - &closed).abs().to_f64() < 1e-20);
    }
}

#[test]
fn even_zeta_regroupings() {
    let (p, r) = reduce_even_products(&partition_poly(4).unwrap());
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].factor, rat(5, 2));
    assert_eq!(p.coeff(&[Sym::Zeta(4)]), rat(9, 4));
    let (p6, _) = reduce_even_products(&partition_poly(6).unwrap());
    assert_eq!(p6.coeff(&[Sym::Zeta(6)]), rat(79, 16));
    assert_eq!(even_zeta_over_two_pi_i(1), rat(-1, 24));
    assert_eq!(even_zeta_over_pi_pow(2), rat(1, 90));
}

#[test]
fn unverified_predictions_are_computed() {
    // beyond the known closed forms the rules are only a prediction; compare with the generating function
    for d in 7..=8 {
        let (reduced, _) = reduce_even_products(&partition_poly(d).unwrap());
        let (oracle, _) = reduce_even_products(&common::gamma_oracle(d as usize));
        println!("d = {d}: rules {} generating function", if reduced == oracle { "agree with" } else { "differ from" });
    }
}
