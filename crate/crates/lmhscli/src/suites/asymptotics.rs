use periodflow::{asymptotics_d1, fit_pi_d, FitConfig, PeriodError};
use serde::Serialize;

use crate::report::num;
use crate::{AsymptoticsArgs, Check, CliError, Session, SuiteReport};

#[derive(Serialize)]
struct Normalized {
    a10: f64,
    a00_times_two_pi_i: f64,
    ratio: f64,
    expected_ratio: f64,
    constant_times_two_pi_i: f64,
    constant_error: f64,
}

pub fn run(session: &Session, args: &AsymptoticsArgs) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::new("asymptotics", session);
    let tol = session.config.tolerance_for("asymptotics", 1e-6);
    let cfg = FitConfig::geometric(args.t_min, args.t_max, args.samples, tol)?.with_corrections(args.corrections);
    rep.put("d", args.d);
    rep.put("samples", &cfg.samples);
    if args.d == 1 {
        d1(session, args, &cfg, tol, &mut rep)?;
    } else {
        if args.fix_leading {
            return Err(CliError::Config("--fix-leading applies to d = 1 only".into()));
        }
        higher(session, args.d, &cfg, &mut rep)?;
    }
    Ok(rep)
}

fn d1(session: &Session, args: &AsymptoticsArgs, cfg: &FitConfig, tol: f64, rep: &mut SuiteReport) -> Result<(), CliError> {
    let ctx = session.ctx();
    let r = asymptotics_d1(cfg, args.fix_leading, ctx)?;
    rep.push(Check::new(
        "d1/constant-over-log",
        "unnormalized constant over log coefficient matches a_00 = l(1/4^4)",
        num(r.expected_ratio),
        num(r.ratio),
        Some(r.ratio_residual),
        r.ratio_residual < tol,
    ));
    if !args.fix_leading {
        let res = (r.leading_ratio - 1.0).abs();
        rep.push(Check::new("d1/leading", "fitted a_10 equals 2", "1", num(r.leading_ratio), Some(res), res < tol));
    }
    let c = r.normalized_constant.abs();
    rep.push(Check::new(
        "d1/normalized-constant",
        "constant term vanishes after t = 16 s",
        "0",
        format!("{} +- {}", num(r.normalized_constant), num(r.normalized_constant_error)),
        Some(c),
        c < tol,
    ));
    let row: Vec<f64> = r.bottom_row.iter().map(|e| e.value).collect();
    let off = row.first().map_or(f64::INFINITY, |v| v.abs()).max(row.last().map_or(f64::INFINITY, |v| (v - 1.0).abs()));
    rep.push(Check::new("d1/bottom-row", "bottom row of the d = 1 limiting period matrix is (0, 1)", "0, 1", row.iter().map(|v| num(*v)).collect::<Vec<_>>().join(", "), Some(off), off < tol));

    // the same range sampled twice as densely
    let dense = FitConfig::geometric(args.t_min, args.t_max, 2 * args.samples, tol)?.with_corrections(args.corrections);
    let r2 = asymptotics_d1(&dense, args.fix_leading, ctx)?;
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for j in 0..r.coefficients.len() {
        let change = (r.coefficients[j] - r2.coefficients[j]).abs();
        ok &= change <= r.error_bars[j] + r2.error_bars[j];
        worst = worst.max(change);
    }
    rep.push(Check::new("d1/second-ladder", "coefficients agree within error bars on a denser sample ladder", "within error bars", num(worst), Some(worst), ok));

    rep.put("coefficients", &r.coefficients);
    rep.put("error_bars", &r.error_bars);
    rep.put("rms_residual", r.rms_residual);
    rep.put(
        "normalized",
        Normalized {
            a10: r.a10,
            a00_times_two_pi_i: r.a00_times_two_pi_i,
            ratio: r.ratio,
            expected_ratio: r.expected_ratio,
            constant_times_two_pi_i: r.normalized_constant,
            constant_error: r.normalized_constant_error,
        },
    );
    rep.put("bottom_row", &r.bottom_row);
    Ok(())
}

fn higher(session: &Session, d: usize, cfg: &FitConfig, rep: &mut SuiteReport) -> Result<(), CliError> {
    let id = format!("d{d}/fit");
    let anchor = "log-polynomial fit of the real period near t = 0 is well conditioned";
    let need = cfg.unknowns(d, 0) + 1;
    if cfg.samples.len() < need {
        let msg = format!("ill-conditioned: {} samples for {} unknowns", cfg.samples.len(), need - 1);
        eprintln!("warning: {msg}; use at least {need} samples");
        rep.push(Check::new(id, anchor, format!("at least {need} samples"), msg, None, false));
        return Ok(());
    }
    match fit_pi_d(d, cfg, &[], session.ctx()) {
        Ok(fit) => {
            let worst = fit.error_bars.iter().copied().fold(0.0, f64::max);
            rep.push(Check::new(id, anchor, format!("error bars < {}", num(cfg.tolerance)), num(worst), Some(worst), true));
            rep.put("coefficients", fit.poly.coeffs.iter().map(|c| c.to_f64()).collect::<Vec<_>>());
            rep.put("error_bars", &fit.error_bars);
            rep.put("rms_residual", fit.rms_residual);
            rep.put("phase_power_of_i", periodflow::PhaseConvention::for_degree(d).power_of_i);
        }
        Err(e @ PeriodError::IllConditioned { .. }) => {
            eprintln!("warning: {e}; more samples or a narrower t range may help");
            rep.push(Check::new(id, anchor, format!("error bars < {}", num(cfg.tolerance)), e.to_string(), None, false));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}
