use std::collections::BTreeMap;

use crate::linalg::{self, Vector};
use crate::{LinError, PeriodEntry, RatMatrix};

/// Monodromy weight filtration `W_k` centred at `center`.
///
/// Stored for `k` in `[center - l, center + l]`, where `l` is the nilpotency
/// index; below that range the subspace is 0 and above it is everything.
#[derive(Clone, Debug)]
pub struct WeightFiltration {
    center: i64,
    dim: usize,
    low: i64,
    subspaces: Vec<Vec<Vector>>,
}

impl WeightFiltration {
    pub fn center_weight(&self) -> i64 {
        self.center
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn min_weight(&self) -> i64 {
        self.low
    }

    pub fn max_weight(&self) -> i64 {
        self.low + self.subspaces.len() as i64 - 1
    }

    fn basis(&self, k: i64) -> Vec<Vector> {
        if k < self.low {
            Vec::new()
        } else if k > self.max_weight() {
            linalg::identity(self.dim)
        } else {
            self.subspaces[(k - self.low) as usize].clone()
        }
    }

    pub fn dim_of(&self, k: i64) -> usize {
        linalg::rank(&self.basis(k), self.dim)
    }

    /// Basis of `W_k` as the columns of a `dim x r` matrix.
    pub fn subspace(&self, k: i64) -> RatMatrix {
        let b = self.basis(k);
        let mut m = RatMatrix::zeros(self.dim, b.len());
        for (j, v) in b.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, PeriodEntry::rational(x.clone()));
            }
        }
        m
    }

    /// Nonzero graded dimensions `dim W_k - dim W_{k-1}`.
    pub fn graded_dims(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for k in self.low..=self.max_weight() {
            let d = self.dim_of(k) - self.dim_of(k - 1);
            if d > 0 {
                out.insert(k, d);
            }
        }
        out
    }
}

/// Builds `W(N)` via `W_{c+k} = sum_{a - b <= k} ker N^{a+1} ∩ im N^b`, then
/// verifies `N W_k ⊆ W_{k-2}` and the hard-Lefschetz isomorphisms before returning.
pub fn weight_filtration(n_op: &RatMatrix, center: i64) -> Result<WeightFiltration, LinError> {
    if !n_op.is_square() {
        return Err(LinError::NotSquare(n_op.rows(), n_op.cols()));
    }
    let dim = n_op.rows();
    let nrows = n_op.to_rat_rows()?;
    if !linalg::mat_pow(&nrows, dim).iter().flatten().all(num_traits::Zero::is_zero) {
        return Err(LinError::NotNilpotent);
    }
    let powers: Vec<Vec<Vector>> = (0..=dim + 1).map(|k| linalg::mat_pow(&nrows, k)).collect();
    let l = (0..=dim).find(|&k| powers[k + 1].iter().flatten().all(num_traits::Zero::is_zero)).unwrap_or(0);
    let kers: Vec<Vec<Vector>> = (0..=dim + 1).map(|k| linalg::kernel(&powers[k], dim)).collect();
    let ims: Vec<Vec<Vector>> = (0..=dim + 1).map(|k| linalg::image(&powers[k], dim)).collect();

    let li = l as i64;
    let mut subspaces = Vec::new();
    for k in -li..=li {
        let mut gens: Vec<Vector> = Vec::new();
        for a in 0..=l {
            for b in 0..=l {
                if a as i64 - b as i64 <= k {
                    gens.extend(linalg::intersect(&kers[a + 1], &ims[b], dim));
                }
            }
        }
        subspaces.push(linalg::span_basis(&gens, dim));
    }
    let w = WeightFiltration { center, dim, low: center - li, subspaces };
    self_check(&w, &powers)?;
    Ok(w)
}

fn self_check(w: &WeightFiltration, powers: &[Vec<Vector>]) -> Result<(), LinError> {
    let dim = w.dim;
    let n_rows = &powers[1];
    if w.dim_of(w.max_weight()) != dim {
        return Err(LinError::FiltrationCheck("top piece is not the whole space".into()));
    }
    for k in w.min_weight()..=w.max_weight() {
        let wk = w.basis(k);
        if !linalg::contains(&wk, &w.basis(k - 1), dim) {
            return Err(LinError::FiltrationCheck(format!("W_{} not inside W_{}", k - 1, k)));
        }
        let image: Vec<Vector> = wk.iter().map(|v| linalg::apply(n_rows, v)).collect();
        if !linalg::contains(&w.basis(k - 2), &image, dim) {
            return Err(LinError::FiltrationCheck(format!("N W_{k} not inside W_{}", k - 2)));
        }
    }
    let c = w.center;
    for l in 1..=(w.max_weight() - c) {
        let up = w.dim_of(c + l) - w.dim_of(c + l - 1);
        let down = w.dim_of(c - l) - w.dim_of(c - l - 1);
        if up != down {
            return Err(LinError::FiltrationCheck(format!("Gr_{} and Gr_{} differ in dimension", c + l, c - l)));
        }
        let nl = &powers[l as usize];
        let mut gens: Vec<Vector> = w.basis(c + l).iter().map(|v| linalg::apply(nl, v)).collect();
        gens.extend(w.basis(c - l - 1));
        if linalg::rank(&gens, dim) != w.dim_of(c - l) {
            return Err(LinError::FiltrationCheck(format!("N^{l} is not onto Gr_{}", c - l)));
        }
    }
    Ok(())
}
