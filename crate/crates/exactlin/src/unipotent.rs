use num_bigint::BigInt;

use crate::{LinError, PeriodEntry, RatMatrix, Rat};

fn nilpotent_power_check(m: &RatMatrix) -> Result<bool, LinError> {
    Ok(m.pow(m.rows() as u32)?.is_zero())
}

/// `log T = sum_{k>=1} (-1)^{k-1} (T - I)^k / k`, which terminates because `T - I` is nilpotent.
pub fn unipotent_log(t: &RatMatrix) -> Result<RatMatrix, LinError> {
    if !t.is_square() {
        return Err(LinError::NotSquare(t.rows(), t.cols()));
    }
    let n = t.rows();
    let m = t.sub(&RatMatrix::identity(n))?;
    if !nilpotent_power_check(&m)? {
        return Err(LinError::NotUnipotent);
    }
    let mut acc = RatMatrix::zeros(n, n);
    let mut p = RatMatrix::identity(n);
    for k in 1..n.max(1) {
        p = p.mul(&m)?;
        if p.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = acc.add(&p.scale(&Rat::new(BigInt::from(sign), BigInt::from(k))))?;
    }
    Ok(acc)
}

pub fn unipotent_exp(nm: &RatMatrix) -> Result<RatMatrix, LinError> {
    if !nm.is_square() {
        return Err(LinError::NotSquare(nm.rows(), nm.cols()));
    }
    let n = nm.rows();
    if !nilpotent_power_check(nm)? {
        return Err(LinError::NotNilpotent);
    }
    let mut acc = RatMatrix::identity(n);
    let mut p = RatMatrix::identity(n);
    let mut fact = BigInt::from(1);
    for k in 1..n.max(1) {
        p = p.mul(nm)?;
        if p.is_zero() {
            break;
        }
        fact *= k;
        acc = acc.add(&p.scale(&Rat::new(BigInt::from(1), fact.clone())))?;
    }
    Ok(acc)
}

/// Nilpotent Jordan block of size `n` with ones on the subdiagonal.
pub fn jordan_nilpotent(n: usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(n, n);
    for i in 1..n {
        m.set(i, i - 1, PeriodEntry::one());
    }
    m
}
