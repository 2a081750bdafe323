use serde::{Deserialize, Serialize};

use crate::SeriesError;

/// A linear denominator factor `coeffs . k + offset`, with `offset` 0 or 1/2.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenFactor {
    pub coeffs: Vec<i64>,
    pub offset: f64,
}

impl DenFactor {
    pub fn new(coeffs: &[i64], half: bool) -> Self {
        DenFactor { coeffs: coeffs.to_vec(), offset: if half { 0.5 } else { 0.0 } }
    }

    pub fn is_half(&self) -> bool {
        self.offset == 0.5
    }
}

/// `rat[0] / rat[1] * pi^pi_pow`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scale {
    pub rat: [i64; 2],
    pub pi_pow: i32,
}

impl Scale {
    pub fn one() -> Self {
        Scale { rat: [1, 1], pi_pow: 0 }
    }

    pub fn inv_pi() -> Self {
        Scale { rat: [1, 1], pi_pow: -1 }
    }

    pub fn to_f64(&self) -> f64 {
        self.rat[0] as f64 / self.rat[1] as f64 * std::f64::consts::PI.powi(self.pi_pow)
    }
}

/// Primed sum over non-negative integer tuples of
/// `scale * prod (1/2)_{poch_j . k} / prod (den_j . k + offset_j)`.
///
/// Points where a denominator vanishes or a Pochhammer argument is negative
/// are skipped.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesSpec {
    pub indices: usize,
    pub poch: Vec<Vec<i64>>,
    pub den: Vec<DenFactor>,
    pub scale: Scale,
}

impl SeriesSpec {
    pub fn validate(&self) -> Result<(), SeriesError> {
        if !(1..=4).contains(&self.indices) {
            return Err(SeriesError::InvalidSpec(format!("{} indices, expected 1..=4", self.indices)));
        }
        if self.poch.iter().any(|f| f.len() != self.indices) || self.den.iter().any(|f| f.coeffs.len() != self.indices) {
            return Err(SeriesError::InvalidSpec("linear form length differs from index count".into()));
        }
        if self.den.iter().any(|f| f.offset != 0.0 && f.offset != 0.5) {
            return Err(SeriesError::InvalidSpec("denominator offset must be 0 or 1/2".into()));
        }
        if self.scale.rat[1] == 0 {
            return Err(SeriesError::InvalidSpec("zero scale denominator".into()));
        }
        Ok(())
    }

    /// True when every term that is not skipped is positive.
    pub fn positive_terms(&self) -> bool {
        let nonneg = |c: &[i64]| c.iter().all(|&x| x >= 0);
        self.den.iter().all(|f| nonneg(&f.coeffs)) && self.scale.rat[0] * self.scale.rat[1] > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SeriesError> {
        let spec: SeriesSpec = serde_json::from_str(s).map_err(|e| SeriesError::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Largest Pochhammer argument reachable with every index at most `k`.
    pub(crate) fn max_poch_arg(&self, k: usize) -> usize {
        self.poch
            .iter()
            .map(|f| f.iter().filter(|&&c| c > 0).map(|&c| c as usize).sum::<usize>() * k)
            .max()
            .unwrap_or(0)
    }
}
