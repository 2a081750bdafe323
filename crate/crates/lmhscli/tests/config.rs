use lmhscli::{FileConfig, RunConfig, Session, SuiteReport};
use proptest::prelude::*;

#[test]
fn defaults_validate() {
    let c = RunConfig::default();
    c.validate().unwrap();
    assert_eq!(c.tolerance_for("d3", 1e-4), 1e-4);
    assert_eq!(c.cutoffs.last(), Some(&128));
}

#[test]
fn tolerance_precedence() {
    let mut c = RunConfig::default();
    c.tolerances.insert("d3".into(), 1e-3);
    assert_eq!(c.tolerance_for("d3", 1e-4), 1e-3);
    assert_eq!(c.tolerance_for("d6", 1e-8), 1e-8);
    c.tolerance = Some(1e-12);
    assert_eq!(c.tolerance_for("d3", 1e-4), 1e-12);
}

#[test]
fn file_parsing() {
    let f = FileConfig::parse("precision_bits = 320\ncutoffs = [8, 16, 32]\nseed = 7\ngeometry = \"P4[5]\"\n").unwrap();
    assert_eq!(f.precision_bits, Some(320));
    assert_eq!(f.cutoffs, Some(vec![8, 16, 32]));
    assert_eq!(f.geometry.as_deref(), Some("P4[5]"));
    assert!(FileConfig::parse("precision_bits = \"many\"").is_err());
    assert!(FileConfig::parse("[section]\nkey = 1").is_err());
}

#[test]
fn empty_report_is_deterministic() {
    let s = Session::new(RunConfig::default()).unwrap();
    let a = SuiteReport::new("x", &s).finish();
    assert!(a.passed());
    assert_eq!(a.to_json(), SuiteReport::new("x", &s).finish().to_json());
}

proptest! {
    #[test]
    fn cutoffs_must_increase(ks in prop::collection::vec(0usize..200, 0..8)) {
        let c = RunConfig { cutoffs: ks.clone(), ..RunConfig::default() };
        let increasing = !ks.is_empty() && ks.windows(2).all(|w| w[0] < w[1]);
        prop_assert_eq!(c.validate().is_ok(), increasing);
    }

    #[test]
    fn tolerances_must_be_positive(t in prop_oneof![-1e3f64..1e3, Just(0.0), Just(f64::NAN), Just(f64::INFINITY)]) {
        let c = RunConfig { tolerance: Some(t), ..RunConfig::default() };
        prop_assert_eq!(c.validate().is_ok(), t.is_finite() && t > 0.0);
        let mut c = RunConfig::default();
        c.tolerances.insert("identities".into(), t);
        prop_assert_eq!(c.validate().is_ok(), t.is_finite() && t > 0.0);
    }
}
