use exactlin::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::MirrorError;

/// Complete intersection of the given multidegree in `WP(weights)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CicyData {
    pub weights: Vec<u32>,
    pub degrees: Vec<u32>,
}

impl CicyData {
    pub fn new(weights: Vec<u32>, degrees: Vec<u32>) -> Self {
        CicyData { weights, degrees }
    }

    fn validate(&self) -> Result<(), MirrorError> {
        let r = self.degrees.len();
        if r == 0 {
            return Err(MirrorError::InvalidData("need at least one degree".into()));
        }
        let sw: u64 = self.weights.iter().map(|&x| x as u64).sum();
        let sd: u64 = self.degrees.iter().map(|&x| x as u64).sum();
        if sw != sd {
            return Err(MirrorError::NotCalabiYau(format!("sum of degrees {sd} != sum of weights {sw}")));
        }
        if self.weights.len() != r + 4 {
            return Err(MirrorError::InvalidData(format!(
                "{} weights and {} degrees do not cut out a 3-fold",
                self.weights.len(),
                r
            )));
        }
        if self.weights.iter().chain(&self.degrees).any(|&x| x == 0) {
            return Err(MirrorError::InvalidData("weights and degrees must be positive".into()));
        }
        if self.weights[0] != 1 || self.weights[1] != 1 {
            return Err(MirrorError::InvalidData("the first two weights must be 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CicyInvariants {
    pub m: Rat,
    pub a: Rat,
    pub b: Rat,
}

type HPoly = [Rat; 4];

fn int(x: u32) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

fn poly_mul(x: &HPoly, y: &HPoly) -> HPoly {
    let mut out: HPoly = Default::default();
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] += &x[i] * &y[j];
        }
    }
    out
}

fn linear(c: u32) -> HPoly {
    [Rat::one(), int(c), Rat::zero(), Rat::zero()]
}

fn one() -> HPoly {
    linear(0)
}

// Inverse of a power series with constant term 1, truncated at H^3.
fn series_inverse(x: &HPoly) -> HPoly {
    let mut inv: HPoly = Default::default();
    inv[0] = Rat::one();
    for k in 1..4 {
        let mut s = Rat::zero();
        for j in 1..=k {
            s += &x[j] * &inv[k - j];
        }
        inv[k] = -s;
    }
    inv
}

/// Coefficients of `H^0..H^3` in the total Chern class, dividing once by the full normal product.
pub fn chern_class_direct(g: &CicyData) -> HPoly {
    let num = g.weights.iter().fold(one(), |acc, &w| poly_mul(&acc, &linear(w)));
    let den = g.degrees.iter().fold(one(), |acc, &d| poly_mul(&acc, &linear(d)));
    poly_mul(&num, &series_inverse(&den))
}

/// Same, dividing factor by factor with geometric series `sum (-d H)^j`.
pub fn chern_class_incremental(g: &CicyData) -> HPoly {
    let mut c = g.weights.iter().fold(one(), |acc, &w| poly_mul(&acc, &linear(w)));
    for &d in &g.degrees {
        let mut geo: HPoly = Default::default();
        let mut pw = Rat::one();
        for slot in geo.iter_mut() {
            *slot = pw.clone();
            pw *= -int(d);
        }
        c = poly_mul(&c, &geo);
    }
    c
}

/// `(m, a, b)` with `c(X) = 1 + a L + b p`, where `m = H^3 = prod d_k`.
pub fn chern_invariants(g: &CicyData) -> Result<CicyInvariants, MirrorError> {
    g.validate()?;
    let c = chern_class_direct(g);
    if c != chern_class_incremental(g) {
        return Err(MirrorError::InvalidData("Chern class expansions disagree".into()));
    }
    if !c[1].is_zero() {
        return Err(MirrorError::NotCalabiYau(format!("first Chern class is {}", c[1])));
    }
    let m = g.degrees.iter().fold(Rat::one(), |acc, &d| acc * int(d));
    Ok(CicyInvariants { a: &m * &c[2], b: &m * &c[3], m })
}

#[derive(Clone, Debug)]
pub struct Geometry {
    pub name: &'static str,
    pub data: CicyData,
    /// Tabulated `(m, a, b)` from the standard list of one-parameter models.
    pub published: (i64, i64, i64),
}

const ROWS: &[(&str, &[u32], &[u32], (i64, i64, i64))] = &[
    ("P4[5]", &[1, 1, 1, 1, 1], &[5], (5, 50, -200)),
    ("P5[2,4]", &[1, 1, 1, 1, 1, 1], &[2, 4], (8, 56, -176)),
    ("P5[3,3]", &[1, 1, 1, 1, 1, 1], &[3, 3], (9, 54, -144)),
    ("P6[2,2,3]", &[1, 1, 1, 1, 1, 1, 1], &[2, 2, 3], (12, 60, -144)),
    ("P7[2,2,2,2]", &[1, 1, 1, 1, 1, 1, 1, 1], &[2, 2, 2, 2], (8, 64, -128)),
    ("WP(1,1,1,2,5)[10]", &[1, 1, 1, 2, 5], &[10], (10, 340, -2880)),
    ("WP(1,1,1,1,4)[8]", &[1, 1, 1, 1, 4], &[8], (8, 176, -1184)),
    ("WP(1,1,2,2,3,3)[6,6]", &[1, 1, 2, 2, 3, 3], &[6, 6], (36, 792, -4320)),
    ("WP(1,1,1,2,2,3)[4,6]", &[1, 1, 1, 2, 2, 3], &[4, 6], (24, 384, -1872)),
    ("WP(1,1,1,1,2)[6]", &[1, 1, 1, 1, 2], &[6], (6, 84, -408)),
    ("WP(1,1,1,1,1,3)[2,6]", &[1, 1, 1, 1, 1, 3], &[2, 6], (12, 156, -768)),
    ("WP(1,1,1,1,2,2)[4,4]", &[1, 1, 1, 1, 2, 2], &[4, 4], (16, 160, -576)),
    ("WP(1,1,1,1,1,2)[3,4]", &[1, 1, 1, 1, 1, 2], &[3, 4], (12, 96, -312)),
];

pub fn registry() -> Vec<Geometry> {
    ROWS.iter()
        .map(|&(name, w, d, published)| Geometry { name, data: CicyData::new(w.to_vec(), d.to_vec()), published })
        .collect()
}

pub fn find_geometry(name: &str) -> Result<Geometry, MirrorError> {
    registry().into_iter().find(|g| g.name == name).ok_or_else(|| MirrorError::UnknownGeometry(name.to_string()))
}
