use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{linalg, LinError, PeriodEntry, Rat};

/// Dense row-major matrix of [`PeriodEntry`] values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<PeriodEntry>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![PeriodEntry::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = PeriodEntry::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<PeriodEntry>) -> Result<Self, LinError> {
        if entries.len() != rows * cols {
            return Err(LinError::DimensionMismatch { left: (rows, cols), right: (entries.len(), 1) });
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn from_rats(rows: Vec<Vec<Rat>>) -> Result<Self, LinError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinError::Json("ragged rows".into()));
        }
        let entries = rows.into_iter().flatten().map(PeriodEntry::rational).collect();
        Self::from_entries(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &PeriodEntry {
        &self.entries[i * self.cols + j]
    }

    /// Rational part of entry `(i, j)`; the Xi part is ignored.
    pub fn rat(&self, i: usize, j: usize) -> Rat {
        self.get(i, j).rational_part().clone()
    }

    pub fn set(&mut self, i: usize, j: usize, v: PeriodEntry) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[PeriodEntry] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(PeriodEntry::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.entries.iter().all(PeriodEntry::is_rational)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn same_shape(&self, o: &Self) -> Result<(), LinError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(LinError::DimensionMismatch { left: (self.rows, self.cols), right: (o.rows, o.cols) });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, LinError> {
        self.same_shape(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect::<Result<_, _>>()?;
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, LinError> {
        self.same_shape(o)?;
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect::<Result<_, _>>()?;
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e.scale(r)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self, LinError> {
        if self.cols != o.rows {
            return Err(LinError::DimensionMismatch { left: (self.rows, self.cols), right: (o.rows, o.cols) });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = PeriodEntry::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = o.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self, LinError> {
        if !self.is_square() {
            return Err(LinError::NotSquare(self.rows, self.cols));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Rational entries as nested rows; fails on any Xi part.
    pub fn to_rat_rows(&self) -> Result<Vec<Vec<Rat>>, LinError> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let e = self.get(i, j);
                        if e.is_rational() {
                            Ok(e.rational_part().clone())
                        } else {
                            Err(LinError::NonRational(i, j))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Exact inverse of a rational square matrix.
    pub fn inverse(&self) -> Result<Self, LinError> {
        if !self.is_square() {
            return Err(LinError::NotSquare(self.rows, self.cols));
        }
        let inv = linalg::inverse(&self.to_rat_rows()?).ok_or(LinError::Singular)?;
        Self::from_rats(inv)
    }

    /// Inverse of a unit lower-triangular matrix, allowed to carry Xi entries.
    pub fn unit_lower_inverse(&self) -> Result<Self, LinError> {
        if !self.is_square() {
            return Err(LinError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let i_n = Self::identity(n);
        let m = i_n.sub(self)?;
        if !m.pow(n as u32)?.is_zero() {
            return Err(LinError::NotUnipotent);
        }
        // (I - M)^-1 = I + M + M^2 + ...
        let mut acc = i_n.clone();
        let mut p = i_n;
        for _ in 1..n {
            p = p.mul(&m)?;
            acc = acc.add(&p)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Result<String, LinError> {
        serde_json::to_string(&MatrixJson::from(self)).map_err(|e| LinError::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self, LinError> {
        let j: MatrixJson = serde_json::from_str(s).map_err(|e| LinError::Json(e.to_string()))?;
        Self::try_from(j)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Wire format: row-major entries, integers as decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntryJson {
    pub num: String,
    pub den: String,
    pub znum: String,
    pub zden: String,
    pub zweight: u32,
}

impl From<&PeriodEntry> for EntryJson {
    fn from(e: &PeriodEntry) -> Self {
        EntryJson {
            num: e.rational_part().numer().to_string(),
            den: e.rational_part().denom().to_string(),
            znum: e.zeta_coeff().numer().to_string(),
            zden: e.zeta_coeff().denom().to_string(),
            zweight: e.zeta_weight(),
        }
    }
}

impl TryFrom<&EntryJson> for PeriodEntry {
    type Error = LinError;
    fn try_from(j: &EntryJson) -> Result<Self, LinError> {
        let parse = |s: &str| s.parse::<BigInt>().map_err(|e| LinError::Json(format!("{s}: {e}")));
        let (den, zden) = (parse(&j.den)?, parse(&j.zden)?);
        if den == BigInt::from(0) || zden == BigInt::from(0) {
            return Err(LinError::Json("zero denominator".into()));
        }
        let q0 = Rat::new(parse(&j.num)?, den);
        let q1 = Rat::new(parse(&j.znum)?, zden);
        if j.zweight == 0 && q1 != Rat::from_integer(0.into()) {
            return Err(LinError::Json("Xi coefficient with weight 0".into()));
        }
        Ok(PeriodEntry::new(q0, q1, j.zweight))
    }
}

impl From<&RatMatrix> for MatrixJson {
    fn from(m: &RatMatrix) -> Self {
        MatrixJson { rows: m.rows, cols: m.cols, entries: m.entries.iter().map(EntryJson::from).collect() }
    }
}

impl TryFrom<MatrixJson> for RatMatrix {
    type Error = LinError;
    fn try_from(j: MatrixJson) -> Result<Self, LinError> {
        let entries = j.entries.iter().map(PeriodEntry::try_from).collect::<Result<_, _>>()?;
        RatMatrix::from_entries(j.rows, j.cols, entries)
    }
}
