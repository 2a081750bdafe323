use exactlin::{rat, PeriodEntry, Rat};
use hpnum::{BigReal, LogPoly, PrecisionCtx};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::closed::{even_zeta_over_two_pi_i, gamma_closed_poly};
use crate::named::ConstantTable;
use crate::recognize::recognize_rational;
use crate::symbolic::{Poly, Sym, SymLogPoly};
use crate::SeriesError;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    /// Error bar propagated from the series evaluations.
    pub error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: &str, lhs: &BigReal, rhs: &BigReal, tolerance: f64) -> Self {
        let residual = (lhs - rhs).abs().to_f64();
        let error = lhs.err() + rhs.err();
        IdentityReport {
            identity: identity.to_string(),
            lhs: lhs.to_f64(),
            rhs: rhs.to_f64(),
            residual,
            error,
            tolerance,
            pass: residual < tolerance && residual <= error.max(f64::EPSILON * rhs.to_f64().abs()),
        }
    }
}

fn g(n: u32) -> Poly {
    Poly::var(Sym::Gamma(n))
}

fn z(n: u32) -> Poly {
    Poly::var(Sym::Zeta(n))
}

fn q(n: i64, d: i64) -> Poly {
    Poly::constant(rat(n, d))
}

fn sum(ps: &[Poly]) -> Poly {
    ps.iter().fold(Poly::zero(), |a, p| a.add(p))
}

fn prod(ps: &[&Poly]) -> Poly {
    ps.iter().fold(Poly::int(1), |a, p| a.mul(p))
}

/// `nu + nu' - psi`.
pub fn g2_combination() -> Poly {
    sum(&[Poly::var(Sym::Nu), Poly::var(Sym::NuPrime), Poly::var(Sym::Psi).scale(&rat(-1, 1))])
}

/// `(8/3) gamma_1^3 + 2 gamma_1 zeta(2) - 12 zeta(3)` in zeta values.
pub fn g2_closed_form() -> Poly {
    sum(&[q(8, 3).mul(&z(1).pow(3)), q(2, 1).mul(&z(1)).mul(&z(2)), q(-12, 1).mul(&z(3))])
}

pub fn beta_delta_identity(t: &ConstantTable, tolerance: f64) -> IdentityReport {
    let lhs = &t.value(Sym::Beta) + &t.value(Sym::Delta);
    let rhs = sum(&[q(2, 1).mul(&g(1).pow(2)), g(2)]).eval(t.prec, |s| t.value(s));
    IdentityReport::new("beta + delta = 2 gamma_1^2 + gamma_2", &lhs, &rhs, tolerance)
}

/// `beta + delta = gamma_1 gamma~_1 + gamma~_2`, the intermediate form.
pub fn beta_delta_tilde_identity(t: &ConstantTable, tolerance: f64) -> IdentityReport {
    let lhs = &t.value(Sym::Beta) + &t.value(Sym::Delta);
    let rhs = g(1).mul(&Poly::var(Sym::GammaTilde(1))).add(&Poly::var(Sym::GammaTilde(2))).eval(t.prec, |s| t.value(s));
    IdentityReport::new("beta + delta = gamma_1 gamma~_1 + gamma~_2", &lhs, &rhs, tolerance)
}

pub fn g2_identity(t: &ConstantTable, tolerance: f64) -> IdentityReport {
    let lhs = g2_combination().eval(t.prec, |s| t.value(s));
    let rhs = g2_closed_form().eval(t.prec, |s| t.value(s));
    IdentityReport::new("nu + nu' - psi = (8/3) gamma_1^3 + 2 gamma_1 zeta(2) - 12 zeta(3)", &lhs, &rhs, tolerance)
}

/// The three region contributions for `d = 3`, as polynomials in `log eps`.
pub fn region_polys_d3() -> [SymLogPoly; 3] {
    let (g1, g2, g3) = (g(1), g(2), g(3));
    let (beta, delta) = (Poly::var(Sym::Beta), Poly::var(Sym::Delta));
    let (nu, nup, psi) = (Poly::var(Sym::Nu), Poly::var(Sym::NuPrime), Poly::var(Sym::Psi));
    let one = SymLogPoly::new(vec![
        sum(&[g1.pow(3), prod(&[&q(-6, 1), &g1, &g2]), q(3, 1).mul(&g3)]),
        sum(&[q(3, 1).mul(&g2), q(-3, 1).mul(&g1.pow(2))]),
        q(3, 2).mul(&g1),
        q(-1, 6),
    ]);
    let two = SymLogPoly::new(vec![
        sum(&[g1.pow(3), prod(&[&q(-2, 1), &g1, &g2]), g1.mul(&beta), nu, psi.scale(&rat(-1, 1))]),
        sum(&[q(-2, 1).mul(&g1.pow(2)), beta.scale(&rat(-1, 1))]),
        q(1, 2).mul(&g1),
    ]);
    let three = SymLogPoly::new(vec![g1.mul(&delta).add(&nup), delta.scale(&rat(-1, 1))]);
    [one, two, three]
}

/// Sum of the region contributions after `log eps = log s + 4 gamma_1`.
pub fn region_poly_d3_symbolic() -> SymLogPoly {
    let [a, b, c] = region_polys_d3();
    a.add(&b).add(&c).shift(&q(4, 1).mul(&g(1)))
}

fn numeric(p: &SymLogPoly, t: &ConstantTable, shift: i32) -> LogPoly {
    LogPoly::new(p.coeffs.iter().map(|c| c.eval(t.prec, |s| t.value(s))).collect(), shift)
}

/// Normalized `d = 3` polynomial in `log s`.
pub fn region_poly_d3(t: &ConstantTable) -> LogPoly {
    numeric(&region_poly_d3_symbolic(), t, 0)
}

#[derive(Clone, Debug, Serialize)]
pub struct CoeffCheck {
    /// Power of `l(s)`.
    pub ell_power: usize,
    pub expected: f64,
    pub computed: f64,
    pub residual: f64,
    pub error: f64,
    pub tolerance: f64,
    pub relative: bool,
    pub pass: bool,
}

impl CoeffCheck {
    fn new(ell_power: usize, expected: f64, computed: &BigReal, tolerance: f64, relative: bool) -> Self {
        let c = computed.to_f64();
        let abs = (c - expected).abs();
        let residual = if relative && expected != 0.0 { abs / expected.abs() } else { abs };
        let error = computed.err();
        let pass = if relative { residual < tolerance } else { abs <= tolerance.max(error) };
        CoeffCheck { ell_power, expected, computed: c, residual, error, tolerance, relative, pass }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct D3Tolerance {
    /// Absolute floor for the vanishing `l^2` coefficient (its error bar also counts).
    pub ell2_abs: f64,
    pub ell1_rel: f64,
    pub const_rel: f64,
    pub max_den: u64,
}

impl Default for D3Tolerance {
    fn default() -> Self {
        D3Tolerance { ell2_abs: 0.0, ell1_rel: 1e-6, const_rel: 1e-4, max_den: 1000 }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremD3 {
    /// `(2 pi i)^-3 * 8 * sum c_j log^j s`.
    pub poly: LogPoly,
    pub checks: Vec<CoeffCheck>,
    /// `zeta(3)`-multiple recognized in the constant term.
    pub q: Result<Rat, SeriesError>,
    /// Exact `l^j` coefficients, `j = 0..=3`, when recognition succeeded.
    pub exact: Option<Vec<PeriodEntry>>,
}

impl TheoremD3 {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass) && self.q.is_ok()
    }
}

/// Rescales the normalized `d = 3` polynomial by `2^3 / (2 pi i)^3` and checks it.
pub fn assemble_d3(t: &ConstantTable, ctx: &PrecisionCtx, tol: &D3Tolerance) -> TheoremD3 {
    let poly = region_poly_d3(t).scale(&ctx.from_i64(8)).times_two_pi_i(-3);
    let ell = |j: usize, k: i32| poly.ell_coeff_over(j, k, ctx).expect("real ratio");
    let zeta3 = t.value(Sym::Zeta(3));
    let c3 = ell(3, 0);
    // l^2 carries (2 pi i)^-1, so compare its real log coefficient
    let c2 = poly.coeffs[2].clone();
    let c1 = ell(1, 0);
    let c0 = ell(0, -3);
    let e1 = rat(16, 1) * even_zeta_over_two_pi_i(1);
    let e1f = e1.to_f64().unwrap_or(f64::NAN);
    let checks = vec![
        CoeffCheck::new(3, -4.0 / 3.0, &c3, tol.ell1_rel, true),
        CoeffCheck::new(2, 0.0, &c2, tol.ell2_abs, false),
        CoeffCheck::new(1, e1f, &c1, tol.ell1_rel, true),
        CoeffCheck::new(0, -48.0 * zeta3.to_f64(), &c0, tol.const_rel, true),
    ];
    let q = recognize_rational(&c0, &zeta3, tol.max_den);
    let exact = q.as_ref().ok().map(|q| {
        vec![
            PeriodEntry::xi(q.clone(), 3),
            PeriodEntry::rational(e1.clone()),
            PeriodEntry::zero(),
            PeriodEntry::rational(rat(-4, 3)),
        ]
    });
    TheoremD3 { poly, checks, q, exact }
}

/// Errors with the per-coefficient residuals unless every check passes.
pub fn theorem_d3(t: &ConstantTable, ctx: &PrecisionCtx, tol: &D3Tolerance) -> Result<TheoremD3, SeriesError> {
    let r = assemble_d3(t, ctx, tol);
    if r.pass() {
        return Ok(r);
    }
    let mut bad: Vec<(String, f64)> =
        r.checks.iter().filter(|c| !c.pass).map(|c| (format!("l^{}", c.ell_power), c.residual)).collect();
    if let Err(e) = &r.q {
        bad.push((format!("q ({e})"), f64::NAN));
    }
    Err(SeriesError::ToleranceExceeded(bad))
}

/// Region (I) polynomial for `d = 6` in `log eps`, coefficients in `gamma_1..gamma_6`.
pub fn region1_d6_symbolic() -> SymLogPoly {
    let (g1, g2, g3, g4, g5, g6) = (g(1), g(2), g(3), g(4), g(5), g(6));
    SymLogPoly::new(vec![
        sum(&[
            q(-6, 1).mul(&g6),
            prod(&[&q(30, 1), &g1, &g5]),
            prod(&[&q(30, 1), &g2, &g4]),
            q(15, 1).mul(&g3.pow(2)),
            q(-20, 1).mul(&g2.pow(3)),
            prod(&[&q(-120, 1), &g1, &g2, &g3]),
            prod(&[&q(-60, 1), &g1.pow(2), &g4]),
            prod(&[&q(90, 1), &g1.pow(2), &g2.pow(2)]),
            prod(&[&q(60, 1), &g1.pow(3), &g3]),
            prod(&[&q(-30, 1), &g1.pow(4), &g2]),
            g1.pow(6),
        ]),
        sum(&[
            q(-6, 1).mul(&g5),
            prod(&[&q(30, 1), &g1, &g4]),
            prod(&[&q(30, 1), &g2, &g3]),
            prod(&[&q(-60, 1), &g1, &g2.pow(2)]),
            prod(&[&q(-60, 1), &g1.pow(2), &g3]),
            prod(&[&q(60, 1), &g1.pow(3), &g2]),
            q(-6, 1).mul(&g1.pow(5)),
        ]),
        sum(&[
            q(-3, 1).mul(&g4),
            prod(&[&q(15, 1), &g1, &g3]),
            q(15, 2).mul(&g2.pow(2)),
            prod(&[&q(-30, 1), &g1.pow(2), &g2]),
            q(15, 2).mul(&g1.pow(4)),
        ]),
        sum(&[g3.scale(&rat(-1, 1)), prod(&[&q(5, 1), &g1, &g2]), q(-10, 3).mul(&g1.pow(3))]),
        sum(&[q(-1, 4).mul(&g2), q(5, 8).mul(&g1.pow(2))]),
        q(-1, 20).mul(&g1),
        q(1, 720),
    ])
}

/// Replaces every `gamma_n` by its closed form in zeta values.
pub fn gammas_to_zetas(p: &Poly) -> Result<Poly, SeriesError> {
    let mut out = p.clone();
    for n in 1..=6 {
        out = out.subst(Sym::Gamma(n), &gamma_closed_poly(n)?);
    }
    Ok(out)
}

/// Coefficient of the bare `zeta(5)` in the `log eps` coefficient of region (I).
pub fn region1_d6_zeta5_part() -> Result<Rat, SeriesError> {
    Ok(gammas_to_zetas(&region1_d6_symbolic().coeff(1))?.coeff(&[Sym::Zeta(5)]))
}

/// Region (I) polynomial for `d = 6`, numerically, in `log eps`.
pub fn region1_poly_d6(t: &ConstantTable) -> LogPoly {
    numeric(&region1_d6_symbolic(), t, 0)
}

/// Top four `log eps` coefficients of regions (I) + (IIa,b) for `d = 6`.
pub fn partial_d6_raw() -> SymLogPoly {
    let g1 = g(1);
    SymLogPoly::new(vec![
        Poly::zero(),
        Poly::zero(),
        Poly::zero(),
        sum(&[
            q(-109, 12).mul(&g1.pow(3)),
            prod(&[&q(37, 6), &g1, &z(2)]),
            q(-2, 1).mul(&z(3)),
            g2_combination().scale(&rat(-1, 6)),
        ]),
        sum(&[q(49, 48).mul(&g1.pow(2)), q(-5, 24).mul(&z(2))]),
        q(-7, 120).mul(&g1),
        q(1, 720),
    ])
}

#[derive(Clone, Debug)]
pub struct PartialD6 {
    /// Normalized top coefficients in `log s`; entries below degree 3 are meaningless.
    pub normalized: SymLogPoly,
    /// `2^6 * l^6` coefficient.
    pub leading: Rat,
    /// `a~_40`, exact.
    pub a40: Rat,
    /// `a~_30 / 2^6 * (2 pi i)^3`.
    pub bracket: Poly,
    pub bracket_value: BigReal,
    pub tolerance: f64,
    /// `l^5` coefficient after normalization; must vanish exactly.
    pub ell5: Poly,
    /// Region (I) alone, normalized, for reference only.
    pub region1_normalized: LogPoly,
}

impl PartialD6 {
    pub fn bracket_vanishes(&self) -> bool {
        let r = self.bracket_value.abs().to_f64();
        r <= self.tolerance.max(self.bracket_value.err())
    }

    pub fn pass(&self) -> bool {
        self.ell5.is_zero() && self.leading == rat(4, 45) && self.a40 == rat(5, 9) && self.bracket_vanishes()
    }
}

/// Normalizes the top of the `d = 6` polynomial (`log eps = log s + 7 gamma_1`).
pub fn assemble_d6(t: &ConstantTable, tolerance: f64) -> Result<PartialD6, SeriesError> {
    let g1 = g(1);
    let normalized = partial_d6_raw().shift(&q(7, 1).mul(&g1));
    let top = normalized.coeff(6);
    let leading = top.coeff(&[]) * rat(64, 1);
    let c4 = normalized.coeff(4);
    let zeta2_part = c4.coeff(&[Sym::Zeta(2)]);
    if c4.sub(&Poly::term(zeta2_part.clone(), vec![Sym::Zeta(2)])).is_zero() {
        let a40 = zeta2_part * even_zeta_over_two_pi_i(1) * rat(64, 1);
        let bracket = normalized.coeff(3);
        let bracket_value = bracket.eval(t.prec, |s| t.value(s));
        let region1_normalized = numeric(&region1_d6_symbolic().shift(&q(7, 1).mul(&g1)), t, 0);
        Ok(PartialD6 { ell5: normalized.coeff(5), normalized, leading, a40, bracket, bracket_value, tolerance, region1_normalized })
    } else {
        Err(SeriesError::ToleranceExceeded(vec![("l^4 not a multiple of zeta(2)".into(), f64::NAN)]))
    }
}

pub fn partial_d6(t: &ConstantTable, tolerance: f64) -> Result<PartialD6, SeriesError> {
    let r = assemble_d6(t, tolerance)?;
    if r.pass() {
        Ok(r)
    } else {
        Err(SeriesError::ToleranceExceeded(vec![("a~_30 bracket".into(), r.bracket_value.to_f64())]))
    }
}
