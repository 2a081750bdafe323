use serde::Serialize;

use crate::{rat, LinError, PeriodEntry, RatMatrix};

/// The standard polarization: anti-diagonal `(1, 1, -1, -1)` read top to bottom.
pub fn polarization_q() -> RatMatrix {
    let mut q = RatMatrix::zeros(4, 4);
    q.set(0, 3, PeriodEntry::one());
    q.set(1, 2, PeriodEntry::one());
    q.set(2, 1, PeriodEntry::rational(rat(-1, 1)));
    q.set(3, 0, PeriodEntry::rational(rat(-1, 1)));
    q
}

/// True iff `M^t Q M == Q`.
pub fn symplectic_check(m: &RatMatrix, q: &RatMatrix) -> Result<bool, LinError> {
    if !m.is_square() || !q.is_square() || m.rows() != q.rows() {
        return Err(LinError::DimensionMismatch { left: (m.rows(), m.cols()), right: (q.rows(), q.cols()) });
    }
    m.to_rat_rows()?;
    q.to_rat_rows()?;
    Ok(m.transpose().mul(q)?.mul(m)? == *q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OmegaGroup {
    Sp4,
    G2,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub group: OmegaGroup,
    pub valid: bool,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub xi: Option<PeriodEntry>,
}

// 0-indexed positions.
const SP4_XI: &[(usize, usize)] = &[(3, 0)];
const SP4_ZERO: &[(usize, usize)] = &[(1, 0), (3, 2)];
const G2_XI: &[(usize, usize)] = &[(5, 0), (6, 1)];
const G2_CIRCLED: &[(usize, usize)] = &[(3, 0), (4, 1), (5, 2), (6, 3)];
const G2_ZERO: &[(usize, usize)] = &[(1, 0), (6, 5)];

pub fn validate_omega_shape(omega: &RatMatrix, group: OmegaGroup) -> ValidationReport {
    let (size, xi_pos, zeros) = match group {
        OmegaGroup::Sp4 => (4, SP4_XI, SP4_ZERO),
        OmegaGroup::G2 => (7, G2_XI, G2_ZERO),
    };
    let mut failures = Vec::new();
    if omega.rows() != size || omega.cols() != size {
        failures.push(format!("expected {size}x{size}, got {}x{}", omega.rows(), omega.cols()));
        return ValidationReport { group, valid: false, failures, xi: None };
    }
    for i in 0..size {
        for j in 0..size {
            let e = omega.get(i, j);
            let pos = (i + 1, j + 1);
            if i == j && !e.is_one() {
                failures.push(format!("diagonal entry {pos:?} is not 1"));
            } else if j > i && !e.is_zero() {
                failures.push(format!("entry {pos:?} above the diagonal is nonzero"));
            } else if i > j && zeros.contains(&(i, j)) && !e.is_zero() {
                failures.push(format!("entry {pos:?} must vanish"));
            } else if i > j && !xi_pos.contains(&(i, j)) && !e.is_rational() {
                failures.push(format!("entry {pos:?} is not rational"));
            }
        }
    }
    match group {
        OmegaGroup::Sp4 => {
            if omega.get(2, 0) != omega.get(3, 1) {
                failures.push("entries (3,1) and (4,2) differ".into());
            }
        }
        OmegaGroup::G2 => {
            for &(i, j) in G2_CIRCLED {
                if !omega.get(i, j).is_rational() {
                    failures.push(format!("circled entry {:?} is not rational", (i + 1, j + 1)));
                }
            }
            if omega.get(5, 0) != omega.get(6, 1) {
                failures.push("G2 equality violated".into());
            }
        }
    }
    let xi = Some(omega.get(xi_pos[0].0, xi_pos[0].1).clone());
    ValidationReport { group, valid: failures.is_empty(), failures, xi }
}
