use std::sync::OnceLock;

use exactlin::{rat, PeriodEntry};
use hpnum::{BigReal, LogPoly, PrecisionCtx};
use periodflow::*;
use proptest::prelude::*;

fn ctx() -> PrecisionCtx {
    PrecisionCtx::new(256, 1e-40)
}

fn d1_config() -> FitConfig {
    FitConfig::geometric(1e-9, 1e-4, 10, 1e-6).unwrap()
}

fn d1_default() -> &'static D1Asymptotics {
    static R: OnceLock<D1Asymptotics> = OnceLock::new();
    R.get_or_init(|| asymptotics_d1(&d1_config(), false, &ctx()).unwrap())
}

/// Samples of `sum c_jk t^k log^j t` plus a deterministic wobble of size `noise`.
fn synthetic(c: &[[f64; 3]], ts: &[f64], noise: f64, ctx: &PrecisionCtx) -> Vec<(BigReal, BigReal)> {
    ts.iter()
        .enumerate()
        .map(|(i, &t)| {
            let tb = ctx.from_f64(t);
            let l = tb.ln();
            let mut v = ctx.from_f64(noise * if i % 2 == 0 { 1.0 } else { -1.0 });
            for (k, row) in c.iter().enumerate() {
                for (j, &cj) in row.iter().enumerate() {
                    v = &v + &(&(&tb.powi(k as u32) * &l.powi(j as u32)) * &ctx.from_f64(cj));
                }
            }
            (tb, v.with_extra_err(noise))
        })
        .collect()
}

#[test]
fn synthetic_round_trip() {
    let c = ctx();
    let coeffs = [[0.75, -1.5, 0.125], [3.0, 0.5, -2.0], [-1.0, 4.0, 0.25]];
    let cfg = FitConfig::geometric(1e-8, 1e-3, 14, 1e-12).unwrap();
    let fit = fit_log_poly(&synthetic(&coeffs, &cfg.samples, 1e-20, &c), 2, &[], &cfg, &c).unwrap();
    for j in 0..3 {
        let got = fit.poly.coeffs[j].to_f64();
        assert!((got - coeffs[0][j]).abs() < 1e-15, "j = {j}: {got}");
        assert!((got - coeffs[0][j]).abs() <= fit.error_bars[j]);
    }
}

#[test]
fn wrong_fixed_leading_is_flagged() {
    let c = ctx();
    let coeffs = [[0.75, -1.5, 0.0], [3.0, 0.5, 0.0], [0.0; 3]];
    let cfg = FitConfig::geometric(1e-8, 1e-3, 12, 1e-10).unwrap();
    let data = synthetic(&coeffs, &cfg.samples, 0.0, &c);
    assert!(fit_log_poly(&data, 1, &[(1, c.from_f64(-1.5))], &cfg, &c).is_ok());
    let bad = fit_log_poly(&data, 1, &[(1, c.from_f64(-1.5 * (1.0 + 1e-6)))], &cfg, &c);
    assert!(matches!(bad, Err(PeriodError::IllConditioned { .. })), "{bad:?}");
}

#[test]
fn fit_configuration_errors() {
    assert!(FitConfig::geometric(1e-4, 1e-9, 8, 1e-6).is_err());
    assert!(FitConfig::geometric(1e-4, 0.5, 8, 1e-6).is_err());
    let c = ctx();
    let cfg = FitConfig::geometric(1e-6, 1e-3, 4, 1e-6).unwrap();
    let data = synthetic(&[[1.0, 1.0, 0.0]; 3], &cfg.samples, 0.0, &c);
    // 4 samples cannot carry 6 unknowns plus a residual
    assert!(matches!(fit_log_poly(&data, 1, &[], &cfg, &c), Err(PeriodError::InvalidConfig(_))));
}

#[test]
fn d1_log_coefficient_and_constant() {
    let r = d1_default();
    assert!((r.leading_ratio - 1.0).abs() < 1e-6, "{}", r.leading_ratio);
    assert!(r.ratio_residual < 1e-6, "{} vs {}", r.ratio, r.expected_ratio);
    // a_00 = l(4^-4)
    assert!((r.a00_times_two_pi_i + 256f64.ln()).abs() < 1e-6);
    assert!(r.normalized_constant.abs() < 1e-6, "{}", r.normalized_constant);
    let row = &r.bottom_row;
    assert_eq!(row.len(), 2);
    assert!(row[0].value.abs() < 1e-6);
    assert!((row[1].value - 1.0).abs() < 1e-12);
}

#[test]
fn d1_with_pinned_leading_term() {
    let r = asymptotics_d1(&d1_config(), true, &ctx()).unwrap();
    assert_eq!(r.error_bars[1], 0.0);
    assert!(r.ratio_residual < 1e-8);
    assert!((r.coefficients[0] - d1_default().coefficients[0]).abs() < 1e-6);
}

#[test]
fn deeper_quadrature_stays_inside_error_bars() {
    let shallow = d1_default();
    let deep = asymptotics_d1(&d1_config(), false, &PrecisionCtx::new(320, 1e-60)).unwrap();
    for j in 0..2 {
        let change = (shallow.coefficients[j] - deep.coefficients[j]).abs();
        assert!(change < shallow.error_bars[j], "j = {j}: {change:e} vs {:e}", shallow.error_bars[j]);
    }
}

#[test]
fn normalization_cancels_by_construction() {
    let c = ctx();
    for d in 1..=6usize {
        // a_(d-1) = -(d+1) d log 4 a_d makes the shifted degree d-1 term vanish
        let lead = c.from_f64(1.25);
        let mut coeffs: Vec<BigReal> = (0..=d).map(|j| c.from_f64(0.5 - j as f64 / 7.0)).collect();
        coeffs[d - 1] = -&(&lead * &normalization_shift(d, &c)).mul_i64(d as i64);
        coeffs[d] = lead;
        let p = LogPoly::new(coeffs, -(d as i32));
        let n = normalize_local_coordinate(&p, d, 1e-60, &c).unwrap();
        assert!(n.coeffs[d - 1].abs().to_f64() < 1e-70);
        let back = denormalize(&n, d, &c);
        for (x, y) in back.coeffs.iter().zip(&p.coeffs) {
            assert!((x - y).abs().to_f64() < 1e-65);
        }
    }
    let p = LogPoly::new(vec![c.one(), c.one()], 0);
    assert!(matches!(normalize_local_coordinate(&p, 1, 1e-6, &c), Err(PeriodError::NormalizationFailed { degree: 0, .. })));
}

#[test]
fn bottom_rows() {
    // l^d 2^d / d!
    for d in 1..=6usize {
        let mut e = vec![PeriodEntry::zero(); d + 1];
        let fact: i64 = (1..=d as i64).product();
        e[d] = PeriodEntry::rational(rat(1 << d, fact));
        let row = bottom_row_exact(&e).unwrap();
        assert!(row[..d].iter().all(PeriodEntry::is_zero));
        assert!(row[d].is_one());
    }
    // normalized d = 3 coefficients: -48 Xi_3, 16 zeta(2)/(2 pi i)^2 = -2/3, 0, -4/3
    let d3 = [
        PeriodEntry::xi(rat(-48, 1), 3),
        PeriodEntry::rational(rat(-2, 3)),
        PeriodEntry::zero(),
        PeriodEntry::rational(rat(-4, 3)),
    ];
    let row = bottom_row_exact(&d3).unwrap();
    assert_eq!(row, vec![PeriodEntry::xi(rat(-48, 1), 3), PeriodEntry::rational(rat(1, 3)), PeriodEntry::zero(), PeriodEntry::one()]);
    // top of the d = 6 row from l^6 = 4/45, l^5 = 0, l^4 = 5/9
    let mut d6 = vec![PeriodEntry::zero(); 7];
    d6[4] = PeriodEntry::rational(rat(5, 9));
    d6[6] = PeriodEntry::rational(rat(4, 45));
    let row = bottom_row_exact(&d6).unwrap();
    assert_eq!(row[4], PeriodEntry::rational(rat(5, 6)));
    assert!(row[5].is_zero());
    assert!(row[6].is_one());
    assert_eq!(bottom_weight(3), rat(-3, 4));
}

#[test]
fn numeric_bottom_row_matches_exact() {
    let c = ctx();
    // the d = 3 polynomial as real log-coefficients times (2 pi i)^-3
    let z3 = hpnum::zeta(3, &c);
    let z2 = hpnum::zeta(2, &c);
    let p = LogPoly::new(
        vec![z3.mul_i64(-48), z2.mul_i64(16), c.zero(), c.from_rat(&rat(-4, 3))],
        -3,
    );
    let row = bottom_row(&p, 3).unwrap();
    assert_eq!(row.iter().map(|e| e.two_pi_i_power).collect::<Vec<_>>(), vec![-3, -2, -1, 0]);
    assert!((row[0].value + 48.0 * z3.to_f64()).abs() < 1e-12);
    // -(1/2) * 16 zeta(2) / (2 pi i)^2
    assert!((row[1].value + 8.0 * z2.to_f64()).abs() < 1e-12);
    assert_eq!(row[2].value, 0.0);
    assert_eq!(row[3].value, 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_round_trips(d in 1usize..=6, raw in prop::collection::vec(-1000i64..1000, 7)) {
        let c = ctx();
        let coeffs: Vec<BigReal> = raw[..=d].iter().map(|&x| c.from_i64(x).div_i64(37)).collect();
        let p = LogPoly::new(coeffs, 0);
        let n = p.shift_log(&normalization_shift(d, &c));
        let back = denormalize(&n, d, &c);
        for (x, y) in back.coeffs.iter().zip(&p.coeffs) {
            prop_assert!((x - y).abs().to_f64() <= 1e-60 * (1.0 + y.abs().to_f64()));
        }
    }
}
