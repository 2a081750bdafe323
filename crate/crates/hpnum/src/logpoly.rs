use crate::{BigReal, PrecisionCtx};

/// `(2 pi i)^shift * sum_j c_j log^j(t)` with real `c_j`.
///
/// Since `log t = (2 pi i) l(t)`, the coefficient of `l^j` is `c_j (2 pi i)^(j + shift)`;
/// powers of `2 pi i` stay symbolic.
#[derive(Clone, Debug)]
pub struct LogPoly {
    pub coeffs: Vec<BigReal>,
    pub shift: i32,
}

impl LogPoly {
    pub fn new(coeffs: Vec<BigReal>, shift: i32) -> Self {
        LogPoly { coeffs, shift }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Real coefficient of `log^j`.
    pub fn log_coeff(&self, j: usize) -> Option<&BigReal> {
        self.coeffs.get(j)
    }

    /// The `l^j` coefficient divided by `(2 pi i)^k`, when that ratio is real.
    pub fn ell_coeff_over(&self, j: usize, k: i32, ctx: &PrecisionCtx) -> Option<BigReal> {
        let c = self.coeffs.get(j)?;
        let e = j as i32 + self.shift - k;
        if e.rem_euclid(2) != 0 {
            return None;
        }
        let two_pi = crate::consts::pi(ctx).mul_i64(2);
        let mag = two_pi.powi(e.unsigned_abs());
        let v = if e >= 0 { c * &mag } else { c / &mag };
        // i^e = +-1 for even e
        Some(if e.rem_euclid(4) == 2 { -v } else { v })
    }

    /// Substitutes `log t = log s + c` and re-expands.
    pub fn shift_log(&self, c: &BigReal) -> LogPoly {
        let n = self.coeffs.len();
        let prec = c.precision();
        let mut out: Vec<BigReal> = (0..n).map(|_| BigReal::from_i64(0, prec)).collect();
        for (j, cj) in self.coeffs.iter().enumerate() {
            // (L + c)^j = sum_i C(j, i) c^(j-i) L^i
            let mut binom = 1i64;
            for i in (0..=j).rev() {
                let term = &(cj * &c.powi((j - i) as u32)).mul_i64(binom);
                out[i] = &out[i] + term;
                binom = binom * (i as i64) / ((j - i + 1) as i64);
            }
        }
        LogPoly { coeffs: out, shift: self.shift }
    }

    pub fn scale(&self, r: &BigReal) -> LogPoly {
        LogPoly { coeffs: self.coeffs.iter().map(|c| c * r).collect(), shift: self.shift }
    }

    pub fn times_two_pi_i(&self, k: i32) -> LogPoly {
        LogPoly { coeffs: self.coeffs.clone(), shift: self.shift + k }
    }

    pub fn max_err(&self) -> f64 {
        self.coeffs.iter().map(BigReal::err).fold(0.0, f64::max)
    }
}
