use std::collections::BTreeSet;

use exactlin::{rat, PeriodEntry};
use hpnum::{li2, zeta, zeta1, BigReal, PrecisionCtx};
use serde::Serialize;
use zetaseries::{
    assemble_d3, assemble_d6, beta_delta_identity, beta_delta_tilde_identity, g2_identity, gamma_closed_poly, gamma_n, gamma_tilde_n,
    partition_poly, reduce_even_products, regrouping_residual, region1_d6_zeta5_part, ConstantTable, D3Tolerance, IdentityReport,
    Mode,
};

use crate::report::num;
use crate::suites::matrices;
use crate::{Check, CliError, Session, Suite, SuiteReport, TableSource};

pub fn run(session: &Session, suite: Suite, source: Option<TableSource>) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::new(suite.key(), session);
    match suite {
        Suite::Identities => identities(session, &mut rep)?,
        Suite::D3 => d3(session, source.unwrap_or(TableSource::Reduced), &mut rep)?,
        Suite::D6 => d6(session, source.unwrap_or(TableSource::Lattice), &mut rep)?,
        Suite::Appendix => appendix(session, &mut rep)?,
        Suite::Matrices => matrices::run(session, &mut rep)?,
    }
    Ok(rep)
}

fn table(session: &Session, source: TableSource) -> Result<&ConstantTable, CliError> {
    match source {
        TableSource::Lattice => session.lattice(),
        TableSource::Reduced => session.reduced(),
    }
}

fn identity_check(id: &str, r: &IdentityReport) -> Check {
    Check::new(id, &r.identity, num(r.rhs), format!("{} +- {}", num(r.lhs), num(r.error)), Some(r.residual), r.pass)
}

fn identities(session: &Session, rep: &mut SuiteReport) -> Result<(), CliError> {
    let tol = |default| session.config.tolerance_for("identities", default);
    // the halved table only feeds the stability check; build both at once
    let (full, half) = std::thread::scope(|s| {
        let h = s.spawn(|| session.lattice_halved().map(|_| ()));
        let full = session.lattice();
        (full, h.join().expect("lattice worker panicked"))
    });
    half?;
    let full = full?;
    let half = session.lattice_halved()?;

    rep.push(identity_check("beta-delta", &beta_delta_identity(full, tol(1e-6))));
    rep.push(identity_check("beta-delta-tilde", &beta_delta_tilde_identity(full, tol(1e-6))));
    let g2 = g2_identity(full, tol(1e-4));
    rep.push(identity_check("g2", &g2));
    let g2_half = g2_identity(half, tol(1e-4));
    let moved = (g2.lhs - g2_half.lhs).abs();
    rep.push(Check::new(
        "g2/cutoff-doubling",
        "nu + nu' - psi is stable under doubling the cutoffs",
        format!("< {}", num(tol(1e-4))),
        num(moved),
        Some(moved),
        moved < tol(1e-4),
    ));
    let reduced = session.reduced()?;
    rep.push(identity_check("g2/one-index", &g2_identity(reduced, tol(1e-8))));
    rep.put("g2", [("lattice", &g2), ("lattice_halved", &g2_half)]);
    Ok(())
}

fn d3(session: &Session, source: TableSource, rep: &mut SuiteReport) -> Result<(), CliError> {
    let t = table(session, source)?;
    let tol = match session.config.tolerance.or_else(|| session.config.tolerances.get("d3").copied()) {
        Some(x) => D3Tolerance { ell2_abs: x, ell1_rel: x, const_rel: x, ..D3Tolerance::default() },
        None => D3Tolerance::default(),
    };
    let r = assemble_d3(t, session.ctx(), &tol);
    for c in &r.checks {
        let anchor = match c.ell_power {
            3 => "normalized d = 3 period: l^3 coefficient is -4/3",
            2 => "normalized d = 3 period: l^2 coefficient vanishes",
            1 => "normalized d = 3 period: l^1 coefficient is 16 zeta(2)/(2 pi i)^2",
            _ => "normalized d = 3 period: constant is -48 zeta(3)/(2 pi i)^3",
        };
        let shown = if c.relative { "relative residual" } else { "residual" };
        rep.push(Check::new(
            format!("d3/l^{}", c.ell_power),
            anchor,
            num(c.expected),
            format!("{} ({shown}, error bar {})", num(c.computed), num(c.error)),
            Some(c.residual),
            c.pass,
        ));
    }
    let q = r.q.as_ref().map(ToString::to_string).unwrap_or_else(|e| e.to_string());
    rep.push(Check::exact("d3/q", "constant term recognized as q zeta(3) with q = -48", "-48", q));
    if let Some(exact) = &r.exact {
        let row = periodflow::bottom_row_exact(exact)?;
        let expected = [PeriodEntry::xi(rat(-48, 1), 3), PeriodEntry::rational(rat(1, 3)), PeriodEntry::zero(), PeriodEntry::one()];
        let fmt = |v: &[PeriodEntry]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        rep.push(Check::exact("d3/bottom-row", "bottom row of the d = 3 limiting period matrix", fmt(&expected), fmt(&row)));
    }
    let coeffs: Vec<(f64, f64)> = r.poly.coeffs.iter().map(|c| (c.to_f64(), c.err())).collect();
    rep.put("coefficients_times_two_pi_i_cubed", coeffs);
    rep.put("source", format!("{source:?}").to_lowercase());
    Ok(())
}

#[derive(Serialize)]
struct Unasserted {
    /// Region (I) alone, normalized; the remaining regions are not available in closed form.
    region_one_normalized: Vec<(f64, f64)>,
    bracket_one_index: Option<f64>,
}

fn d6(session: &Session, source: TableSource, rep: &mut SuiteReport) -> Result<(), CliError> {
    let t = table(session, source)?;
    let r = assemble_d6(t, session.config.tolerance_for("d6", 1e-8))?;
    rep.push(Check::exact("d6/l^6", "normalized d = 6 period: 2^6 times the l^6 coefficient", "4/45", &r.leading));
    rep.push(Check::exact("d6/l^5", "normalized d = 6 period: l^5 coefficient vanishes", "0", &r.ell5));
    rep.push(Check::exact("d6/l^4", "normalized d = 6 period: a~_40", "5/9", &r.a40));
    let b = r.bracket_value.abs().to_f64();
    rep.push(Check::new(
        "d6/l^3-bracket",
        "normalized d = 6 period: the a~_30 bracket vanishes within series error",
        format!("0 (error bar {})", num(r.bracket_value.err().max(r.tolerance))),
        num(r.bracket_value.to_f64()),
        Some(b),
        r.bracket_vanishes(),
    ));
    let z5 = region1_d6_zeta5_part()?;
    rep.push(Check::exact("d6/region-one-zeta5", "region (I) log eps coefficient has zeta(5) part -36 zeta(5)", "-36", z5));
    let bracket_one_index = match source {
        TableSource::Lattice => session.reduced().ok().and_then(|t| assemble_d6(t, 1.0).ok()).map(|r| r.bracket_value.to_f64()),
        TableSource::Reduced => None,
    };
    rep.put(
        "unasserted",
        Unasserted {
            region_one_normalized: r.region1_normalized.coeffs.iter().map(|c| (c.to_f64(), c.err())).collect(),
            bracket_one_index,
        },
    );
    rep.put("bracket", r.bracket.to_string());
    Ok(())
}

fn appendix(session: &Session, rep: &mut SuiteReport) -> Result<(), CliError> {
    let ctx = session.ctx();
    let tol = |default| session.config.tolerance_for("appendix", default);
    for n in 1..=6 {
        push_pair(rep, &format!("gamma/{n}"), "direct series of gamma_n equals its closed form", &gamma_n(n, Mode::Direct, ctx)?, &gamma_n(n, Mode::Closed, ctx)?, tol(1e-10));
    }
    for n in 0..=3 {
        push_pair(rep, &format!("gamma-tilde/{n}"), "direct series of gamma~_n equals its closed form", &gamma_tilde_n(n, Mode::Direct, ctx)?, &gamma_tilde_n(n, Mode::Closed, ctx)?, tol(1e-10));
    }
    li2_checks(ctx, rep, tol(1e-20))?;

    let mut seen = BTreeSet::new();
    for d in 1..=6 {
        let (reduced, regroupings) = reduce_even_products(&partition_poly(d)?);
        let closed = gamma_closed_poly(d)?;
        rep.push(Check::exact(format!("partition/{d}"), "partition rules reproduce the closed form of gamma_d", &closed, &reduced));
        for g in regroupings {
            let key: Vec<String> = g.product.iter().map(|k| format!("zeta({k})")).collect();
            let key = key.join("");
            if !seen.insert(key.clone()) {
                continue;
            }
            let r = regrouping_residual(&g, ctx);
            rep.push(Check::new(
                format!("regroup/{key}"),
                "even zeta product as a rational multiple of a single even zeta",
                format!("{} zeta({})", g.factor, g.target),
                key,
                Some(r),
                r < tol(1e-20),
            ));
        }
    }
    Ok(())
}

fn push_pair(rep: &mut SuiteReport, id: &str, anchor: &str, direct: &BigReal, closed: &BigReal, tol: f64) {
    let r = (direct - closed).abs().to_f64();
    rep.push(Check::new(id, anchor, num(closed.to_f64()), num(direct.to_f64()), Some(r), r < tol));
}

fn li2_checks(ctx: &PrecisionCtx, rep: &mut SuiteReport, tol: f64) -> Result<(), CliError> {
    let z2 = zeta(2, ctx);
    let x = ctx.from_i64(1).div_i64(3);
    let y = &ctx.one() - &x;
    let lhs = &li2(&x, ctx)? + &li2(&y, ctx)?;
    let rhs = &z2 - &(&x.ln() * &y.ln());
    push_pair(rep, "li2/reflection", "Li2(x) + Li2(1-x) = zeta(2) - log x log(1-x) at x = 1/3", &lhs, &rhs, tol);
    let half = ctx.one().div_i64(2);
    let lhs = li2(&half, ctx)?.mul_i64(2);
    let z1 = zeta1(ctx);
    let rhs = &z2 - &(&z1 * &z1).div_i64(4);
    push_pair(rep, "li2/half", "2 Li2(1/2) = zeta(2) - zeta(1)^2/4 with zeta(1) = log 4", &lhs, &rhs, tol);
    Ok(())
}
