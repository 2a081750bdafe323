use hpnum::{pi, BigReal, PrecisionCtx};
use periodflow::*;

fn ctx() -> PrecisionCtx {
    PrecisionCtx::new(256, 1e-40)
}

/// `pi / AGM(1, sqrt t)`, the closed form of the `d = 1` real period.
fn agm_oracle(t: &BigReal, ctx: &PrecisionCtx) -> BigReal {
    let (mut a, mut b) = (ctx.one(), t.sqrt());
    for _ in 0..40 {
        let next = (&a + &b).div_i64(2);
        b = (&a * &b).sqrt();
        a = next;
    }
    &pi(ctx) / &a
}

#[test]
fn pi_1_forms_agree() {
    let c = ctx();
    for t in [0.5, 0.1, 1e-3] {
        let t = c.from_f64(t);
        let u = big_pi_1(&t, &c).unwrap();
        let o = agm_oracle(&t, &c);
        assert!((&u - &o).abs().to_f64() < 1e-35, "t = {}: {:e} err {:e}", t.to_f64(), (&u - &o).abs().to_f64(), u.err());
        let direct = pi_1_direct(&t, &PrecisionCtx::new(128, 1e-20)).unwrap();
        assert!((direct.to_f64() - 2.0 * u.to_f64()).abs() < 1e-12);
        let p = pi_d(1, &t, &c).unwrap();
        assert_eq!(p.phase, 0);
        assert!((&p.value - &u.mul_i64(2)).abs().to_f64() < 1e-35);
    }
}

#[test]
fn pi_1_log_growth_stabilizes() {
    let c = ctx();
    let limit = 2.0 * 16f64.ln();
    let mut last = f64::INFINITY;
    for e in [4, 6, 8, 10] {
        let t = 10f64.powi(-e);
        let v = pi_d(1, &c.from_f64(t), &c).unwrap().value.to_f64() + 2.0 * t.ln();
        let gap = (v - limit).abs();
        assert!(gap < last);
        last = gap;
    }
    assert!(last < 1e-8);
}

#[test]
fn domain_guards() {
    let c = ctx();
    for t in [0.0, 1.0, 1.5, -0.2] {
        assert!(matches!(pi_d(1, &c.from_f64(t), &c), Err(PeriodError::Domain(_))));
        assert!(big_pi_1(&c.from_f64(t), &c).is_err());
    }
    assert!(pi_d(0, &c.from_f64(0.5), &c).is_err());
    assert!(pi_d(7, &c.from_f64(0.5), &c).is_err());
    assert!(pi_d_nested(2, 1.0).is_err());
}

#[test]
fn vanishing_cycle_normalization() {
    let c = ctx();
    let v = vanishing_cycle_check(&c).unwrap();
    assert!((&v - &pi(&c)).abs().to_f64() < 1e-30);
}

#[test]
fn tabulated_and_nested_iterates_agree() {
    let c = PrecisionCtx::new(128, 1e-20);
    for d in 2..=3 {
        for t in [0.4, 0.05, 1e-3] {
            let tab = pi_d(d, &c.from_f64(t), &c).unwrap();
            assert_eq!(tab.phase, d as u32 - 1);
            let nested = pi_d_nested(d, t).unwrap();
            let r = (tab.value.to_f64() - nested).abs();
            assert!(r < 1e-9 * nested.abs().max(1.0), "d = {d}, t = {t}: {} vs {nested}", tab.value.to_f64());
            assert!(r <= tab.value.err() + 1e-11 * nested.abs(), "d = {d}, t = {t}: {r:e} vs bar {:e}", tab.value.err());
        }
    }
}

#[test]
fn higher_iterates_are_finite_and_positive() {
    let c = PrecisionCtx::new(128, 1e-20);
    for d in 4..=6 {
        let v = pi_d(d, &c.from_f64(0.01), &c).unwrap();
        println!("d = {d}: {} +- {:e}", v.value.to_f64(), v.value.err());
        assert!(v.value.to_f64() > 0.0 && v.value.to_f64().is_finite());
        assert_eq!(PhaseConvention::for_degree(d).power_of_i, v.phase);
    }
}
