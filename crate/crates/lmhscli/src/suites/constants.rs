use serde::Serialize;
use zetaseries::{gamma_n, gamma_tilde_n, named_constant, reduced_constant, Ladder, Mode, NamedConstant};

use crate::report::num;
use crate::session::halved;
use crate::{Check, CliError, ConstantsArgs, Session, SuiteReport};

enum Name {
    Gamma(u32),
    GammaTilde(u32),
    Named(NamedConstant),
}

fn parse(s: &str) -> Result<Name, CliError> {
    let index = |rest: &str, lo: u32, hi: u32| rest.parse::<u32>().ok().filter(|n| (lo..=hi).contains(n));
    if let Some(n) = s.strip_prefix("gamma_tilde_").and_then(|r| index(r, 0, 3)) {
        return Ok(Name::GammaTilde(n));
    }
    if let Some(n) = s.strip_prefix("gamma_").and_then(|r| index(r, 1, 6)) {
        return Ok(Name::Gamma(n));
    }
    s.parse::<NamedConstant>().map(Name::Named).map_err(|_| CliError::Config(format!("unknown constant `{s}`")))
}

fn all_names() -> Vec<String> {
    let mut v: Vec<String> = (1..=6).map(|n| format!("gamma_{n}")).collect();
    v.extend((0..=3).map(|n| format!("gamma_tilde_{n}")));
    v.extend(NamedConstant::ALL.iter().map(|c| c.key().to_string()));
    v
}

#[derive(Serialize)]
struct Value {
    name: String,
    mode: &'static str,
    value: String,
    error: f64,
}

pub fn run(session: &Session, args: &ConstantsArgs) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::new("constants", session);
    let ctx = session.ctx();
    let tol = session.config.tolerance_for("constants", 1e-10);
    let names = if args.all { all_names() } else { args.names.clone() };
    let parsed = names.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
    let mut values = vec![];
    let mut record = |name: &str, mode, v: &hpnum::BigReal, error: f64| {
        values.push(Value { name: name.to_string(), mode, value: v.to_decimal(30), error });
    };
    for (key, name) in names.iter().zip(parsed) {
        match name {
            Name::Gamma(n) | Name::GammaTilde(n) => {
                let tilde = matches!(name, Name::GammaTilde(_));
                let f = if tilde { gamma_tilde_n } else { gamma_n };
                let direct = f(n, Mode::Direct, ctx)?;
                let closed = f(n, Mode::Closed, ctx)?;
                let r = (&direct - &closed).abs().to_f64();
                let anchor = if tilde { "direct series of gamma~_n equals its zeta-value closed form" } else { "direct series of gamma_n equals its zeta-value closed form" };
                rep.push(Check::new(format!("{key}/direct-vs-closed"), anchor, num(closed.to_f64()), num(direct.to_f64()), Some(r), r < tol));
                record(key, "direct", &direct, direct.err());
                record(key, "closed", &closed, closed.err());
            }
            Name::Named(c) => {
                let spec = c.spec();
                let ladder = if spec.indices >= 4 { session.config.ladder() } else { Ladder::default_for(spec.indices) };
                let full = named_constant(c, ctx, Some(&ladder))?;
                let half = named_constant(c, ctx, Some(&halved(&ladder)))?;
                let moved = (&full.value - &half.value).abs().to_f64();
                rep.push(Check::new(
                    format!("{key}/cutoff-doubling"),
                    "error bar at half the cutoff covers the change on doubling it",
                    format!("<= {}", num(half.error)),
                    num(moved),
                    Some(moved),
                    moved <= half.error,
                ));
                let one = reduced_constant(c, ctx, None)?;
                let r = (&full.value - &one.value).abs().to_f64();
                let bar = full.error + one.error;
                rep.push(Check::new(
                    format!("{key}/lattice-vs-one-index"),
                    "lattice sum agrees with the one-index form within error bars",
                    num(one.value.to_f64()),
                    num(full.value.to_f64()),
                    Some(r),
                    r <= bar,
                ));
                record(key, "lattice", &full.value, full.error);
                record(key, "one_index", &one.value, one.error);
            }
        }
    }
    rep.put("values", values);
    Ok(rep)
}
