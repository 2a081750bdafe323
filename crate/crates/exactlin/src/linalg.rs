//! Row reduction and subspace bookkeeping on plain rational arrays.
//! Subspaces are lists of vectors (not necessarily independent on input).

use num_traits::{One, Zero};

use crate::Rat;

pub(crate) type Vector = Vec<Rat>;

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(a: &mut [Vector]) -> Vec<usize> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rat::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..ncols {
                    let v = a[r][j].clone() * f.clone();
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Independent basis of the span of `vs` (ambient dimension `n`).
pub(crate) fn span_basis(vs: &[Vector], n: usize) -> Vec<Vector> {
    let mut a: Vec<Vector> = vs.iter().filter(|v| v.len() == n).cloned().collect();
    let piv = rref(&mut a);
    a.truncate(piv.len());
    a
}

pub(crate) fn rank(vs: &[Vector], n: usize) -> usize {
    span_basis(vs, n).len()
}

/// Kernel of the linear map given by `rows` (each row a covector of length n).
pub(crate) fn kernel(rows: &[Vector], n: usize) -> Vec<Vector> {
    let mut a = rows.to_vec();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); n];
            v[f] = Rat::one();
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub(crate) fn apply(rows: &[Vector], v: &[Rat]) -> Vector {
    rows.iter()
        .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub(crate) fn mat_mul(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(Rat::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub(crate) fn identity(n: usize) -> Vec<Vector> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect()
}

pub(crate) fn mat_pow(a: &[Vector], k: usize) -> Vec<Vector> {
    let mut acc = identity(a.len());
    for _ in 0..k {
        acc = mat_mul(&acc, a);
    }
    acc
}

/// Column space of a square matrix.
pub(crate) fn image(rows: &[Vector], n: usize) -> Vec<Vector> {
    let cols: Vec<Vector> = (0..n).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    span_basis(&cols, n)
}

pub(crate) fn intersect(u: &[Vector], w: &[Vector], n: usize) -> Vec<Vector> {
    let u = span_basis(u, n);
    let w = span_basis(w, n);
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    // Solve sum x_i u_i = sum y_j w_j; each kernel vector gives an intersection element.
    let k = u.len() + w.len();
    let rows: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row = Vec::with_capacity(k);
            row.extend(u.iter().map(|v| v[r].clone()));
            row.extend(w.iter().map(|v| -v[r].clone()));
            row
        })
        .collect();
    let ker = kernel(&rows, k);
    let out: Vec<Vector> = ker
        .iter()
        .map(|c| {
            let mut v = vec![Rat::zero(); n];
            for (x, ui) in c.iter().zip(&u) {
                for (vi, a) in v.iter_mut().zip(ui) {
                    *vi += x * a;
                }
            }
            v
        })
        .collect();
    span_basis(&out, n)
}

pub(crate) fn contains(big: &[Vector], small: &[Vector], n: usize) -> bool {
    let r = rank(big, n);
    let mut both = big.to_vec();
    both.extend_from_slice(small);
    rank(&both, n) == r
}

pub(crate) fn inverse(a: &[Vector]) -> Option<Vec<Vector>> {
    let n = a.len();
    let mut aug: Vec<Vector> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
