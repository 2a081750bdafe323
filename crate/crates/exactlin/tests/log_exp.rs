use exactlin::{rat, unipotent_exp, unipotent_log, LinError, PeriodEntry, RatMatrix, Rat};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rat {
    rat(n, d)
}

fn mat(rows: &[&[Rat]]) -> RatMatrix {
    RatMatrix::from_rats(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

// Monodromy in the K-theory basis for parameters (m, a), entered by hand.
fn monodromy(m: i64, a: i64) -> RatMatrix {
    let z = q(0, 1);
    let o = q(1, 1);
    mat(&[
        &[o.clone(), z.clone(), z.clone(), z.clone()],
        &[q(-1, 1), o.clone(), z.clone(), z.clone()],
        &[z.clone(), q(m, 1), o.clone(), z.clone()],
        &[q(-(a + 2 * m), 12), q(m, 1), o.clone(), o],
    ])
}

#[test]
fn log_of_identity_is_zero() {
    let n = unipotent_log(&RatMatrix::identity(4)).unwrap();
    assert!(n.is_zero());
}

#[test]
fn exp_of_zero_is_identity() {
    let t = unipotent_exp(&RatMatrix::zeros(4, 4)).unwrap();
    assert_eq!(t, RatMatrix::identity(4));
}

#[test]
fn exp_of_two_by_two_block() {
    let n = mat(&[&[q(0, 1), q(0, 1)], &[q(1, 1), q(0, 1)]]);
    let t = unipotent_exp(&n).unwrap();
    assert_eq!(t, mat(&[&[q(1, 1), q(0, 1)], &[q(1, 1), q(1, 1)]]));
}

#[test]
fn log_of_quintic_monodromy() {
    let n = unipotent_log(&monodromy(5, 50)).unwrap();
    assert_eq!(n.rat(1, 0), q(-1, 1));
    assert_eq!(n.rat(2, 0), q(5, 2));
    assert_eq!(n.rat(2, 1), q(5, 1));
    assert_eq!(n.rat(3, 0), q(-25, 6));
    assert_eq!(n.rat(3, 1), q(5, 2));
    assert_eq!(n.rat(3, 2), q(1, 1));
    for i in 0..4 {
        for j in i..4 {
            assert!(n.rat(i, j).is_zero());
        }
    }
}

#[test]
fn exp_reproduces_monodromy_m8_a56() {
    let n = mat(&[
        &[q(0, 1), q(0, 1), q(0, 1), q(0, 1)],
        &[q(-1, 1), q(0, 1), q(0, 1), q(0, 1)],
        &[q(4, 1), q(8, 1), q(0, 1), q(0, 1)],
        &[q(-14, 3), q(4, 1), q(1, 1), q(0, 1)],
    ]);
    let t = unipotent_exp(&n).unwrap();
    assert_eq!(t, monodromy(8, 56));
    assert_eq!(t.rat(3, 0), q(-6, 1));
}

#[test]
fn not_unipotent_is_rejected() {
    let mut t = RatMatrix::identity(3);
    t.set(0, 0, PeriodEntry::rational(q(2, 1)));
    assert!(matches!(unipotent_log(&t), Err(LinError::NotUnipotent)));
    let n = RatMatrix::identity(3);
    assert!(matches!(unipotent_exp(&n), Err(LinError::NotNilpotent)));
}

#[test]
fn xi_times_xi_is_guarded() {
    let x = PeriodEntry::xi(q(1, 1), 3);
    let y = PeriodEntry::xi(q(-2, 1), 3);
    assert!(matches!(x.mul(&y), Err(LinError::XiProduct { .. })));
    let mut a = RatMatrix::identity(2);
    a.set(1, 0, x.clone());
    assert!(a.mul(&a).is_ok());
    let mut b = RatMatrix::identity(2);
    b.set(1, 0, x);
    b.set(0, 1, y);
    assert!(b.mul(&b).is_err());
}

#[test]
fn xi_entries_survive_log() {
    let mut t = RatMatrix::identity(3);
    t.set(1, 0, PeriodEntry::rational(q(1, 1)));
    t.set(2, 0, PeriodEntry::xi(q(3, 1), 3));
    let n = unipotent_log(&t).unwrap();
    let back = unipotent_exp(&n).unwrap();
    assert_eq!(back, t);
}

fn strictly_lower(dim: usize, vals: &[i64]) -> RatMatrix {
    let mut m = RatMatrix::zeros(dim, dim);
    let mut it = vals.iter().cycle();
    for i in 0..dim {
        for j in 0..i {
            let v = *it.next().unwrap();
            let d = 1 + (v.rem_euclid(4));
            m.set(i, j, PeriodEntry::rational(q(v, d)));
        }
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn log_exp_round_trip(dim in 1usize..=10, vals in proptest::collection::vec(-9i64..=9, 1..60)) {
        let n0 = strictly_lower(dim, &vals);
        let t = unipotent_exp(&n0).unwrap();
        prop_assert_eq!(unipotent_log(&t).unwrap(), n0.clone());
        let t2 = unipotent_exp(&unipotent_log(&t).unwrap()).unwrap();
        prop_assert_eq!(t2, t);
    }

    #[test]
    fn exp_is_unipotent(dim in 1usize..=8, vals in proptest::collection::vec(-5i64..=5, 1..40)) {
        let t = unipotent_exp(&strictly_lower(dim, &vals)).unwrap();
        for i in 0..dim {
            prop_assert!(t.rat(i, i).is_one());
        }
    }
}
