use hpnum::{f_closed, f_iterated, f_step, pi, tanh_sinh, tanh_sinh_to_infinity, zeta, zeta1, BigReal, HpError, PrecisionCtx, QuadOptions};

fn close(a: &BigReal, b: &BigReal, tol: f64) {
    let d = (a - b).to_f64().abs();
    assert!(d < tol, "{a:?} vs {b:?}: diff {d:e}");
}

#[test]
fn semi_infinite_pi() {
    let c = PrecisionCtx::default();
    let q = tanh_sinh_to_infinity(|u: &BigReal, um1: &BigReal| (u * &um1.sqrt()).recip(), &c.one(), QuadOptions::new(1e-30)).unwrap();
    close(&q.value, &pi(&c), 1e-28);
}

#[test]
fn zero_integrand() {
    let q = tanh_sinh(|_: &f64, _, _| 0.0, &0.0, &1.0, QuadOptions::new(1e-14)).unwrap();
    assert_eq!(q.value, 0.0);
}

#[test]
fn beta_half_half_is_pi() {
    let c = PrecisionCtx::default();
    let q = tanh_sinh(|_, da: &BigReal, db: &BigReal| (da * db).sqrt().recip(), &c.zero(), &c.one(), QuadOptions::new(1e-30)).unwrap();
    close(&q.value, &pi(&c), 1e-28);
    let qf = tanh_sinh(|_, da: &f64, db: &f64| 1.0 / (da * db).sqrt(), &0.0, &1.0, QuadOptions::new(1e-13)).unwrap();
    assert!((qf.value - std::f64::consts::PI).abs() < 1e-13);
}

#[test]
fn nonconvergence_is_reported() {
    let r = tanh_sinh(|x: &f64, _, _| (1.0 / x).sin() / x, &0.0, &1.0, QuadOptions::new(1e-14).with_max_level(4));
    assert!(matches!(r, Err(HpError::NoConvergence { .. })));
}

// h_n(t) = sum_k t^k binom(-1/2, k) / k^n, an oracle for f_n(u) = h_n(u^2 - 1) when |u^2 - 1| < 1.
fn h_series(n: i32, t: f64) -> f64 {
    let mut b = 1.0;
    let mut s = 0.0;
    let mut tk = 1.0;
    for k in 1..4000 {
        b *= (-0.5 - (k as f64 - 1.0)) / k as f64;
        tk *= t;
        s += tk * b / (k as f64).powi(n);
    }
    s
}

#[test]
fn closed_forms_match_series() {
    let c = PrecisionCtx::default();
    for &u in &[0.4f64, 0.6, 0.9, 1.2] {
        for n in 0..=3 {
            let v = f_closed(n, &c.from_f64(u.min(1.0)), &c).unwrap().to_f64();
            if u <= 1.0 {
                assert!((v - h_series(n as i32, u * u - 1.0)).abs() < 1e-12, "f_{n}({u})");
            }
        }
    }
    assert!(f_closed(2, &c.from_f64(1.2), &c).is_err());
}

#[test]
fn endpoint_values() {
    let c = PrecisionCtx::default();
    assert!(f_closed(0, &c.one(), &c).unwrap().is_zero());
    close(&f_closed(1, &c.zero(), &c).unwrap(), &zeta1(&c), 1e-60);
    let z1 = zeta1(&c);
    let z2 = zeta(2, &c);
    let g2 = &z2 - &(&z1 * &z1).div_i64(2);
    close(&f_closed(2, &c.zero(), &c).unwrap(), &g2, 1e-40);
    let g3 = &(&zeta(3, &c).mul_i64(2) - &(&z2 * &z1)) + &z1.powi(3).div_i64(6);
    close(&f_closed(3, &c.zero(), &c).unwrap(), &g3, 1e-40);
    assert!(matches!(f_closed(1, &c.from_f64(-0.1), &c), Err(HpError::DomainError(_))));
    assert!(matches!(f_closed(0, &c.zero(), &c), Err(HpError::DomainError(_))));
}

#[test]
fn recursion_agrees_with_closed_forms() {
    let c = PrecisionCtx::default();
    for &u in &[0.0, 0.25, 0.7] {
        for n in 1..=3 {
            let closed = f_closed(n, &c.from_f64(u), &c).unwrap();
            let step = f_step(n, &c.from_f64(u), &c).unwrap();
            close(&step, &closed, 1e-28);
            let it = f_iterated(n, &u, QuadOptions::new(1e-13)).unwrap();
            assert!((it - closed.to_f64()).abs() < 1e-11, "n={n} u={u}: {it}");
        }
    }
}

#[test]
fn nested_recursion_at_moderate_precision() {
    let c = PrecisionCtx::new(128, 1e-20);
    let u = c.from_f64(0.3);
    let it = f_iterated(2, &u, QuadOptions::new(1e-20)).unwrap();
    close(&it, &f_closed(2, &u, &c).unwrap(), 1e-19);
}
