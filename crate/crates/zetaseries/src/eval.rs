use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use hpnum::{BigReal, PrecisionCtx};
use serde::Serialize;

use crate::{SeriesError, SeriesSpec};

/// Decay exponents below this mean the partial sums are not settling.
const MIN_DECAY_RATE: f64 = 0.1;

/// Strictly increasing list of box cutoffs; the box for `K` is `0..=K` in every index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ladder(Vec<usize>);

impl Ladder {
    pub fn new(ks: Vec<usize>) -> Result<Self, SeriesError> {
        if ks.is_empty() || ks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SeriesError::BadLadder);
        }
        Ok(Ladder(ks))
    }

    /// `2^lo, 2^(lo+1), ..., 2^hi`.
    pub fn powers_of_two(lo: u32, hi: u32) -> Self {
        Ladder((lo..=hi).map(|j| 1usize << j).collect())
    }

    /// Alternating ratios 3/2 and 4/3: `8, 12, 16, 24, ...` up to `max`.
    pub fn half_octaves(min: usize, max: usize) -> Self {
        let mut ks = vec![];
        let mut k = min;
        while k <= max {
            ks.push(k);
            if k + k / 2 <= max {
                ks.push(k + k / 2);
            }
            k *= 2;
        }
        Ladder(ks)
    }

    /// Ladder sized for the per-point cost of `indices`-fold sums.
    pub fn default_for(indices: usize) -> Self {
        match indices {
            1 | 2 => Self::powers_of_two(7, 14),
            3 => Self::half_octaves(8, 512),
            _ => Self::half_octaves(8, 128),
        }
    }

    pub fn ks(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> usize {
        *self.0.last().expect("non-empty")
    }

    /// Every cutoff doubled.
    pub fn doubled(&self) -> Self {
        Ladder(self.0.iter().map(|k| 2 * k).collect())
    }

    /// The ladder with its top rung removed, when that leaves something.
    pub fn truncated(&self) -> Option<Self> {
        (self.0.len() > 1).then(|| Ladder(self.0[..self.0.len() - 1].to_vec()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesValue {
    #[serde(skip)]
    pub value: BigReal,
    pub estimate: f64,
    /// Per-index upper bound of the largest box summed.
    pub truncation_cutoff: Vec<usize>,
    /// `(K, partial sum over 0..=K)` for each rung.
    pub partial_sums: Vec<(usize, f64)>,
    /// Bound on the mass beyond the largest box: extrapolated tail plus `error`.
    pub tail_estimate: f64,
    /// Extrapolation spread plus rounding allowance.
    pub error: f64,
}

impl SeriesValue {
    pub fn last_partial(&self) -> f64 {
        self.partial_sums.last().map_or(0.0, |p| p.1)
    }
}

#[derive(Clone, Copy, Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `(1/2)_n = C(2n, n) / 4^n` for `n = 0..=n_max`.
pub fn half_pochhammer_table(n_max: usize) -> Vec<f64> {
    let mut p = Vec::with_capacity(n_max + 1);
    p.push(1.0);
    for k in 0..n_max {
        let prev = p[k];
        p.push(prev * (2 * k + 1) as f64 / (2 * k + 2) as f64);
    }
    p
}

struct Kernel<'a> {
    spec: &'a SeriesSpec,
    ptab: Vec<f64>,
    bucket_of: Vec<usize>,
    nb: usize,
    kmax: usize,
}

impl Kernel<'_> {
    /// Shell sums for all boxes whose first index equals `first`.
    fn chunk(&self, first: usize) -> Vec<Neumaier> {
        let n = self.spec.indices;
        let mut shells = vec![Neumaier::default(); self.nb];
        let poch = &self.spec.poch;
        let den = &self.spec.den;
        let mut pbase = vec![0i64; poch.len()];
        let mut dbase = vec![0.0f64; den.len()];
        let mut vary_p: Vec<(i64, i64)> = Vec::with_capacity(poch.len());
        let mut vary_d: Vec<(f64, f64)> = Vec::with_capacity(den.len());
        // outer holds indices 0..n-1; the last index is the inner loop
        let mut outer = vec![0usize; n - 1];
        if n > 1 {
            outer[0] = first;
        }
        loop {
            let mo = outer.iter().copied().max().unwrap_or(0);
            for (b, f) in pbase.iter_mut().zip(poch) {
                *b = outer.iter().zip(f).map(|(&t, &c)| t as i64 * c).sum();
            }
            for (b, f) in dbase.iter_mut().zip(den) {
                *b = outer.iter().zip(&f.coeffs).map(|(&t, &c)| (t as i64 * c) as f64).sum::<f64>() + f.offset;
            }
            // fold factors that do not involve the inner index
            let mut cst = 1.0;
            let mut dead = false;
            vary_p.clear();
            vary_d.clear();
            for (f, &b) in poch.iter().zip(&pbase) {
                let c = f[n - 1];
                if c == 0 {
                    if b < 0 {
                        dead = true;
                    } else {
                        cst *= self.ptab[b as usize];
                    }
                } else {
                    vary_p.push((b, c));
                }
            }
            for (f, &b) in den.iter().zip(&dbase) {
                let c = f.coeffs[n - 1];
                if c == 0 {
                    if b == 0.0 {
                        dead = true;
                    } else {
                        cst /= b;
                    }
                } else {
                    vary_d.push((b, c as f64));
                }
            }
            if !dead {
                let mut cur = Neumaier::default();
                let mut curb = self.bucket_of[mo];
                'inner: for i in 0..=self.kmax {
                    let mut t = cst;
                    for &(b, c) in &vary_p {
                        let v = b + c * i as i64;
                        if v < 0 {
                            continue 'inner;
                        }
                        t *= self.ptab[v as usize];
                    }
                    let mut d = 1.0;
                    for &(b, c) in &vary_d {
                        let v = b + c * i as f64;
                        if v == 0.0 {
                            continue 'inner;
                        }
                        d *= v;
                    }
                    let bk = self.bucket_of[mo.max(i)];
                    if bk != curb {
                        shells[curb].add(cur.value());
                        cur = Neumaier::default();
                        curb = bk;
                    }
                    cur.add(t / d);
                }
                shells[curb].add(cur.value());
            }
            // advance the odometer over outer indices 1..n-1
            let mut j = n - 1;
            loop {
                if j <= 1 {
                    return shells;
                }
                j -= 1;
                if outer[j] < self.kmax {
                    outer[j] += 1;
                    break;
                }
                outer[j] = 0;
            }
        }
    }
}

/// Box partial sums `S(K)` of `spec` (without the global scale) for every rung.
pub fn partial_sums(spec: &SeriesSpec, ladder: &Ladder) -> Result<Vec<f64>, SeriesError> {
    spec.validate()?;
    let ks = ladder.ks();
    let kmax = ladder.max();
    let mut bucket_of = vec![0usize; kmax + 1];
    let mut b = 0;
    for (m, slot) in bucket_of.iter_mut().enumerate() {
        while ks[b] < m {
            b += 1;
        }
        *slot = b;
    }
    let kernel = Kernel { spec, ptab: half_pochhammer_table(spec.max_poch_arg(kmax)), bucket_of, nb: ks.len(), kmax };
    let chunks = if spec.indices > 1 { kmax + 1 } else { 1 };
    let workers = std::thread::available_parallelism().map_or(1, usize::from).min(chunks);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Vec<Neumaier>>>> = Mutex::new(vec![None; chunks]);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let c = next.fetch_add(1, Ordering::Relaxed);
                if c >= chunks {
                    break;
                }
                let r = kernel.chunk(c);
                results.lock().expect("no poisoned workers")[c] = Some(r);
            });
        }
    });
    // combine in chunk order so the result does not depend on scheduling
    let mut total = vec![Neumaier::default(); ks.len()];
    for r in results.into_inner().expect("no poisoned workers").into_iter().flatten() {
        for (t, x) in total.iter_mut().zip(r) {
            t.add(x.sum);
            t.add(x.comp);
        }
    }
    let mut acc = Neumaier::default();
    Ok(total
        .iter()
        .map(|t| {
            acc.add(t.sum);
            acc.add(t.comp);
            acc.value()
        })
        .collect())
}

/// Polynomial extrapolation of `ys(h)` to `h = 0`.
pub fn neville_at_zero(hs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = hs.len();
    for m in 1..n {
        for i in 0..n - m {
            p[i] = (hs[i] * p[i + 1] - hs[i + m] * p[i]) / (hs[i] - hs[i + m]);
        }
    }
    p[0]
}

/// Decay exponent `q` in `S(K) ~ S - C K^-q`, fitted to three rungs.
fn decay_rate(k: [f64; 3], s: [f64; 3]) -> Option<f64> {
    let (d1, d2) = (s[1] - s[0], s[2] - s[1]);
    if d1 == 0.0 || d2 == 0.0 || d1.signum() != d2.signum() {
        return None;
    }
    let r = d2 / d1;
    let model = |q: f64| {
        if q.abs() < 1e-9 {
            (k[2] / k[1]).ln() / (k[1] / k[0]).ln()
        } else {
            (k[1].powf(-q) - k[2].powf(-q)) / (k[0].powf(-q) - k[1].powf(-q))
        }
    };
    // model is decreasing in q
    let (mut lo, mut hi) = (-4.0, 16.0);
    if r >= model(lo) {
        return Some(lo);
    }
    if r <= model(hi) {
        return Some(hi);
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if model(mid) > r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Sums `spec` over each box of the ladder and extrapolates in `K^-1/2`.
pub fn eval_series(spec: &SeriesSpec, ctx: &PrecisionCtx, ladder: &Ladder) -> Result<SeriesValue, SeriesError> {
    let sums = partial_sums(spec, ladder)?;
    let scale = spec.scale.to_f64();
    let partial = ladder.ks().iter().zip(&sums).map(|(&k, &s)| (k, s * scale)).collect();
    extrapolate(partial, spec.indices, ctx)
}

/// Turns box partial sums into a value with tail and error estimates.
///
/// `indices` only sizes the rounding allowance.
pub fn extrapolate(partial: Vec<(usize, f64)>, indices: usize, ctx: &PrecisionCtx) -> Result<SeriesValue, SeriesError> {
    let last = partial.last().ok_or(SeriesError::BadLadder)?.1;
    let kmax = partial.last().expect("non-empty").0;
    // rungs with K = 0 carry no asymptotic information
    let usable: Vec<(f64, f64)> = partial.iter().filter(|p| p.0 > 0).map(|&(k, s)| ((k as f64).powf(-0.5), s)).collect();
    if usable.len() >= 3 {
        let n = usable.len();
        let k3 = [n - 3, n - 2, n - 1].map(|i| usable[i].0.powi(-2));
        let s3 = [n - 3, n - 2, n - 1].map(|i| usable[i].1);
        if let Some(rate) = decay_rate(k3, s3) {
            if rate < MIN_DECAY_RATE {
                return Err(SeriesError::DivergenceDetected { rate });
            }
        }
    }
    let (estimate, tail, error) = if usable.len() < 2 {
        (last, f64::INFINITY, f64::INFINITY)
    } else {
        let (hs, ys): (Vec<f64>, Vec<f64>) = usable.iter().copied().unzip();
        let n = hs.len();
        let full = neville_at_zero(&hs, &ys);
        let spread = if n >= 3 {
            let coarse = neville_at_zero(&hs[..n - 1], &ys[..n - 1]);
            let fine = neville_at_zero(&hs[1..], &ys[1..]);
            (full - coarse).abs().max((full - fine).abs())
        } else {
            (full - last).abs()
        };
        let points = (kmax as f64 + 1.0).powi(indices as i32);
        let rounding = 8.0 * f64::EPSILON * (points.sqrt() * full.abs() + ys.iter().fold(0.0f64, |m, y| m.max(y.abs())));
        let error = spread + rounding;
        // the extrapolation uncertainty is part of what may have been omitted
        (full, (full - last).abs() + error, error)
    };
    let value = BigReal::from_f64(estimate, ctx.working_bits).with_extra_err(if error.is_finite() { error } else { f64::MAX });
    Ok(SeriesValue { value, estimate, truncation_cutoff: vec![kmax; indices], partial_sums: partial, tail_estimate: tail, error })
}
