use exactlin::{jordan_nilpotent, rat, unipotent_exp, unipotent_log, weight_filtration, PeriodEntry, Rat, RatMatrix, WeightFiltration};
use mirrorcy::{chern_invariants, monodromy_T, nilpotent_N, registry};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Check, CliError, Session, SuiteReport};

pub const CONJUGATES: usize = 50;

fn columns(m: &RatMatrix) -> Vec<Vec<Rat>> {
    (0..m.cols()).map(|j| (0..m.rows()).map(|i| m.rat(i, j)).collect()).collect()
}

/// Rank of a list of vectors, by plain elimination.
fn rank(vectors: &[Vec<Rat>]) -> usize {
    let mut a = vectors.to_vec();
    let width = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in 0..width {
                    let v = &a[r][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

fn span_rank(parts: &[&RatMatrix]) -> usize {
    let vs: Vec<Vec<Rat>> = parts.iter().flat_map(|m| columns(m)).collect();
    rank(&vs)
}

/// `N W_k` inside `W_(k-2)` for every `k`.
fn lowers_by_two(n: &RatMatrix, w: &WeightFiltration) -> Result<bool, CliError> {
    for k in w.min_weight() - 1..=w.max_weight() + 2 {
        let image = n.mul(&w.subspace(k))?;
        let below = w.subspace(k - 2);
        if span_rank(&[&below, &image]) != span_rank(&[&below]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `N^j : Gr_(c+j) -> Gr_(c-j)` is onto between spaces of equal dimension.
fn lefschetz(n: &RatMatrix, w: &WeightFiltration) -> Result<bool, CliError> {
    let c = w.center_weight();
    let gr = |k: i64| w.dim_of(k) - w.dim_of(k - 1);
    let top = w.max_weight() - c;
    for j in 0..=top {
        if gr(c + j) != gr(c - j) {
            return Ok(false);
        }
        let image = n.pow(j as u32)?.mul(&w.subspace(c + j))?;
        let target = w.subspace(c - j);
        let below = w.subspace(c - j - 1);
        let got = span_rank(&[&image, &below]);
        if got != w.dim_of(c - j) || span_rank(&[&image, &below, &target]) != got {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_conjugator(n: usize, rng: &mut ChaCha8Rng) -> Result<(RatMatrix, RatMatrix), CliError> {
    // unit lower times unit upper: always invertible
    let mut l = RatMatrix::identity(n);
    let mut u = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, PeriodEntry::rational(rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))));
            u.set(j, i, PeriodEntry::rational(rat(rng.gen_range(-3..=3), rng.gen_range(1..=3))));
        }
    }
    let p = l.mul(&u)?;
    let inv = p.inverse()?;
    Ok((p, inv))
}

fn same_span(a: &RatMatrix, b: &RatMatrix) -> bool {
    let ra = span_rank(&[a]);
    ra == span_rank(&[b]) && span_rank(&[a, b]) == ra
}

pub fn run(session: &Session, rep: &mut SuiteReport) -> Result<(), CliError> {
    for d in 1..=6usize {
        let n = jordan_nilpotent(d + 1);
        let t = unipotent_exp(&n)?;
        let round = unipotent_log(&t)? == n && unipotent_exp(&unipotent_log(&t)?)? == t;
        rep.push(Check::new(format!("jordan/{d}/exp-log"), "exp and log are inverse on a single Jordan block", true, round, None, round));

        let center = d as i64;
        let w = weight_filtration(&n, center)?;
        let dims = w.graded_dims();
        let expected: Vec<i64> = (0..=d as i64).map(|i| center - d as i64 + 2 * i).collect();
        let ok = dims.keys().copied().collect::<Vec<_>>() == expected && dims.values().all(|&v| v == 1);
        let fmt = |ks: &[i64]| ks.iter().map(|k| format!("{k}:1")).collect::<Vec<_>>().join(" ");
        let got = dims.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ");
        rep.push(Check::new(format!("jordan/{d}/graded"), "graded pieces of W(N) are one-dimensional at weights n-d, n-d+2, ..., n+d", fmt(&expected), got, None, ok));

        let lowers = lowers_by_two(&n, &w)?;
        rep.push(Check::new(format!("jordan/{d}/lowers-weight"), "N W_k lies in W_(k-2)", true, lowers, None, lowers));
        let iso = lefschetz(&n, &w)?;
        rep.push(Check::new(format!("jordan/{d}/lefschetz"), "N^j maps Gr_(n+j) isomorphically onto Gr_(n-j)", true, iso, None, iso));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(session.config.seed);
    let mut good = 0;
    let mut first_bad = None;
    for s in 0..CONJUGATES {
        let d = 1 + s % 6;
        let n = jordan_nilpotent(d + 1);
        let (p, inv) = random_conjugator(d + 1, &mut rng)?;
        let conj = p.mul(&n)?.mul(&inv)?;
        let w = weight_filtration(&n, d as i64)?;
        let wc = weight_filtration(&conj, d as i64)?;
        let mut ok = true;
        for k in w.min_weight() - 1..=w.max_weight() + 1 {
            ok &= same_span(&p.mul(&w.subspace(k))?, &wc.subspace(k));
        }
        if ok {
            good += 1;
        } else {
            first_bad.get_or_insert(s);
        }
    }
    let computed = match first_bad {
        None => format!("{good}/{CONJUGATES}"),
        Some(s) => format!("{good}/{CONJUGATES}, first failure at sample {s}"),
    };
    rep.push(Check::new("conjugation", "W(P N P^-1) = P W(N) for random rational P", format!("{CONJUGATES}/{CONJUGATES}"), computed, None, good == CONJUGATES));

    for g in registry() {
        let inv = chern_invariants(&g.data)?;
        let ok = unipotent_log(&monodromy_T(&inv)?)? == nilpotent_N(&inv)?;
        rep.push(Check::new(format!("monodromy/{}/log-T", g.name), "log of the monodromy is the tabulated N", true, ok, None, ok));
    }
    Ok(())
}
