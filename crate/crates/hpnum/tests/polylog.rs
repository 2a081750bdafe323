use hpnum::{li2, li3, log2, pi, tanh_sinh, verify_polylog_integral_lemmas, zeta, zeta1, BigReal, PrecisionCtx, QuadOptions};
use proptest::prelude::*;

fn close(a: &BigReal, b: &BigReal, tol: f64) {
    let d = (a - b).to_f64().abs();
    assert!(d < tol, "{a:?} vs {b:?}: diff {d:e}");
}

#[test]
fn li2_special_values() {
    let c = PrecisionCtx::default();
    close(&li2(&c.one(), &c).unwrap(), &zeta(2, &c), 1e-60);
    let half = c.from_f64(0.5);
    let z1 = zeta1(&c);
    let expect = (&zeta(2, &c) - &(&z1 * &z1).div_i64(4)).div_i64(2);
    close(&li2(&half, &c).unwrap(), &expect, 1e-40);
    assert!(li2(&c.from_f64(1.5), &c).is_err());
}

#[test]
fn li3_half_classical_and_by_quadrature() {
    let c = PrecisionCtx::default();
    let l = log2(&c);
    let p = pi(&c);
    // 7/8 zeta(3) - pi^2 log2 / 12 + log^3 2 / 6
    let classical = &(&zeta(3, &c).mul_i64(7).div_i64(8) - &(&(&p * &p) * &l).div_i64(12)) + &l.powi(3).div_i64(6);
    let v = li3(&c.from_f64(0.5), &c).unwrap();
    close(&v, &classical, 1e-40);
    // Li3(1/2) = int_0^{1/2} Li2(x)/x dx, Li2 itself from int_0^x -log(1-y)/y dy, in f64.
    let q = tanh_sinh(
        |x: &f64, _, _| {
            let inner = tanh_sinh(|y: &f64, _, _| -(-y).ln_1p() / y, &0.0, x, QuadOptions::new(1e-15)).unwrap();
            inner.value / x
        },
        &0.0,
        &0.5,
        QuadOptions::new(1e-14),
    )
    .unwrap();
    assert!((q.value - v.to_f64()).abs() < 1e-13, "{} vs {}", q.value, v.to_f64());
}

#[test]
fn branch_switch_is_continuous() {
    // Power series below 1/2, log-series above; compare across the seam.
    let c = PrecisionCtx::default();
    for x in ["0.4999999999", "0.5000000001"] {
        let w = BigReal::parse(x, 256);
        let series_sum = {
            // plain sum at 1e-30 accuracy, independent of both branches
            let wf: f64 = x.parse().unwrap();
            (1..400).map(|k| wf.powi(k) / (k as f64).powi(2)).sum::<f64>()
        };
        assert!((li2(&w, &c).unwrap().to_f64() - series_sum).abs() < 1e-15);
    }
}

#[test]
fn lemma_report_is_tight() {
    let c = PrecisionCtx::default();
    let rep = verify_polylog_integral_lemmas(&c).unwrap();
    assert!(rep.max_residual < 1e-25, "{rep:#?}");
    assert!(rep.checks.iter().any(|ch| ch.name.contains("reflection")));
    assert!(rep.checks.iter().any(|ch| ch.name.contains("integral from 1/2")));
}

#[test]
fn reflection_within_four_targets() {
    let c = PrecisionCtx::default();
    let z2 = zeta(2, &c);
    for i in 1..20 {
        let w = c.from_f64(i as f64 / 20.0);
        let wc = &c.one() - &w;
        let lhs = &(&li2(&w, &c).unwrap() + &li2(&wc, &c).unwrap()) + &(&w.ln() * &wc.ln());
        assert!((&lhs - &z2).to_f64().abs() < 4.0 * c.target_abs_error);
    }
}

#[test]
fn derivatives_by_central_differences_at_128_bits() {
    let c = PrecisionCtx::new(128, 1e-30);
    let h = c.from_f64(1e-12);
    for &wf in &[0.1, 0.3, 0.5, 0.7, 0.9] {
        let w = c.from_f64(wf);
        let d2 = &(&li2(&(&w + &h), &c).unwrap() - &li2(&(&w - &h), &c).unwrap()) / &h.mul_i64(2);
        let t2 = -(&(&c.one() - &w).ln() / &w);
        assert!(((&d2 - &t2) / t2.clone()).to_f64().abs() < 1e-8);
        let d3 = &(&li3(&(&w + &h), &c).unwrap() - &li3(&(&w - &h), &c).unwrap()) / &h.mul_i64(2);
        let t3 = &li2(&w, &c).unwrap() / &w;
        assert!(((&d3 - &t3) / t3.clone()).to_f64().abs() < 1e-8);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn li2_matches_f64_series(w in 0.0f64..0.45) {
        let c = PrecisionCtx::new(128, 1e-30);
        let s: f64 = (1..2000).map(|k| w.powi(k) / (k as f64).powi(2)).sum();
        prop_assert!((li2(&c.from_f64(w), &c).unwrap().to_f64() - s).abs() < 1e-15);
    }
}
