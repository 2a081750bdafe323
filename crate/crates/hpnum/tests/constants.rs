use hpnum::{bernoulli, log2, pi, zeta, zeta1, zeta_nonpositive, BigReal, PrecisionCtx};
use num_rational::BigRational;

const APERY: &str = "1.2020569031595942853997381615114499907649862923404988817922715553";
const ZETA5: &str = "1.0369277551433699263313654864570341680570809195019128119741926779";
const PI: &str = "3.1415926535897932384626433832795028841971693993751058209749445923";
const LN2: &str = "0.69314718055994530941723212145817656807550013436025525412068000949";

fn ctx() -> PrecisionCtx {
    PrecisionCtx::default()
}

fn close(a: &BigReal, b: &BigReal, tol: f64) {
    let d = (a - b).to_f64().abs();
    assert!(d < tol, "{a:?} vs {b:?}: diff {d:e}");
}

#[test]
fn pi_and_log2_match_reference_digits() {
    let c = ctx();
    close(&pi(&c), &BigReal::parse(PI, 256), 1e-60);
    close(&log2(&c), &BigReal::parse(LN2, 256), 1e-60);
    assert!(pi(&c).err() < 1e-70);
}

#[test]
fn even_zeta_values() {
    let c = ctx();
    let p = pi(&c);
    close(&zeta(2, &c), &(&p * &p).div_i64(6), 1e-60);
    close(&zeta(4, &c), &p.powi(4).div_i64(90), 1e-60);
    close(&zeta(6, &c), &p.powi(6).div_i64(945), 1e-60);
}

#[test]
fn odd_zeta_reference_and_two_precisions() {
    let c = ctx();
    close(&zeta(3, &c), &BigReal::parse(APERY, 256), 1e-60);
    close(&zeta(5, &c), &BigReal::parse(ZETA5, 256), 1e-60);
    for n in 2..=8 {
        let lo = zeta(n, &c);
        let hi = zeta(n, &c.doubled());
        close(&lo, &hi.round_to(256), c.target_abs_error);
        assert!(lo.err() <= c.target_abs_error, "zeta({n}) err {}", lo.err());
    }
}

#[test]
fn zeta1_is_log4() {
    let c = ctx();
    close(&zeta1(&c), &log2(&c).mul_i64(2), 1e-70);
    close(&zeta1(&c).exp(), &c.from_i64(4), 1e-60);
}

#[test]
fn bernoulli_and_negative_zeta() {
    let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    assert_eq!(bernoulli(1), r(-1, 2));
    assert_eq!(bernoulli(2), r(1, 6));
    assert_eq!(bernoulli(12), r(-691, 2730));
    assert_eq!(bernoulli(7), r(0, 1));
    assert_eq!(zeta_nonpositive(0), r(-1, 2));
    assert_eq!(zeta_nonpositive(1), r(-1, 12));
    assert_eq!(zeta_nonpositive(3), r(1, 120));
}

#[test]
fn decimal_rendering() {
    let c = ctx();
    let s = pi(&c).to_decimal(20);
    assert_eq!(s, "3.1415926535897932385e0");
    assert_eq!(c.from_f64(-0.00125).to_decimal(5), "-1.25e-3");
    assert_eq!(c.zero().to_decimal(5), "0");
    assert!((pi(&c).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    assert_eq!(c.from_f64(-1.5e-300).to_f64(), -1.5e-300);
}
