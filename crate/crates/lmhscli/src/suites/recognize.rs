use hpnum::{pi, zeta, BigReal, PrecisionCtx};
use zetaseries::recognize_rational;

use crate::{Check, CliError, RecognizeArgs, Session, SuiteReport};

fn base_value(s: &str, ctx: &PrecisionCtx) -> Result<BigReal, CliError> {
    let bad = || CliError::Config(format!("unknown base `{s}` (use 1, pi, pi^k or zeta<n>)"));
    match s {
        "1" => Ok(ctx.one()),
        "pi" => Ok(pi(ctx)),
        _ => {
            if let Some(k) = s.strip_prefix("pi^") {
                let k: u32 = k.parse().map_err(|_| bad())?;
                return Ok(pi(ctx).powi(k));
            }
            let n: u32 = s.strip_prefix("zeta").ok_or_else(bad)?.trim_matches(|c| c == '(' || c == ')').parse().map_err(|_| bad())?;
            if !(2..=64).contains(&n) {
                return Err(bad());
            }
            Ok(zeta(n, ctx))
        }
    }
}

/// Half a unit in the last written digit.
fn implied_error(s: &str) -> Result<f64, CliError> {
    let bad = || CliError::Config(format!("`{s}` is not a decimal number"));
    let t = s.trim();
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let digits = mant.trim_start_matches(['-', '+']);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit() || c == '.') || digits.matches('.').count() > 1 {
        return Err(bad());
    }
    let frac = digits.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
    Ok(0.5 * 10f64.powi(exp - frac))
}

pub fn run(session: &Session, args: &RecognizeArgs) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::new("recognize", session);
    let ctx = session.ctx();
    let err = match args.error {
        Some(e) if e.is_finite() && e >= 0.0 => e,
        Some(e) => return Err(CliError::Config(format!("error = {e} must be non-negative"))),
        None => implied_error(&args.value)?,
    };
    let x = BigReal::parse(args.value.trim(), ctx.working_bits).with_extra_err(err);
    let base = base_value(&args.base, ctx)?;
    let anchor = format!("value is a rational multiple of {} with denominator <= {}", args.base, args.max_den);
    let times = |q: &str| if args.base == "1" { q.to_string() } else { format!("{q} * {}", args.base) };
    let check = match recognize_rational(&x, &base, args.max_den) {
        Ok(q) => Check::new("rational", anchor, times("q"), times(&q.to_string()), None, true),
        Err(e) => Check::new("rational", anchor, times("q"), e.to_string(), None, false),
    };
    rep.push(check);
    rep.put("input_error", err);
    Ok(rep)
}
