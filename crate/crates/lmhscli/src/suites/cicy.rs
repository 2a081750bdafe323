use exactlin::{polarization_q, rat, symplectic_check, unipotent_exp, validate_omega_shape, OmegaGroup, PeriodEntry};
use mirrorcy::{
    chern_invariants, cicy_report, find_geometry, gram, monodromy_T, nilpotent_N, normalized_params, omega_lim, registry, xi_basis,
    CicyData,
};

use crate::{CicyArgs, Check, CliError, Session, SuiteReport};

struct Target {
    name: String,
    data: CicyData,
    published: Option<(i64, i64, i64)>,
}

fn targets(session: &Session, args: &CicyArgs) -> Result<Vec<Target>, CliError> {
    let tabulated = |name: &str| -> Result<Target, CliError> {
        let g = find_geometry(name)?;
        Ok(Target { name: g.name.to_string(), data: g.data, published: Some(g.published) })
    };
    if let (Some(w), Some(d)) = (&args.weights, &args.degrees) {
        let data = CicyData::new(w.clone(), d.clone());
        // the same data as a table row is reported under the row's name
        if let Some(g) = registry().into_iter().find(|g| g.data == data) {
            return Ok(vec![Target { name: g.name.to_string(), data, published: Some(g.published) }]);
        }
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        return Ok(vec![Target { name: format!("WP({})[{}]", join(w), join(d)), data, published: None }]);
    }
    if let Some(name) = args.name.as_deref().or(if args.all { None } else { session.config.geometry.as_deref() }) {
        return Ok(vec![tabulated(name)?]);
    }
    Ok(registry().into_iter().map(|g| Target { name: g.name.to_string(), data: g.data, published: Some(g.published) }).collect())
}

pub fn run(session: &Session, args: &CicyArgs) -> Result<SuiteReport, CliError> {
    let mut rep = SuiteReport::new("cicy", session);
    let mut payload = vec![];
    for t in targets(session, args)? {
        let inv = chern_invariants(&t.data)?;
        let id = |s: &str| format!("{}/{s}", t.name);
        if let Some((m, a, b)) = t.published {
            let row = format!("tabulated (m, a, b) of {}", t.name);
            rep.push(Check::exact(id("m"), &row, m, &inv.m));
            rep.push(Check::exact(id("a"), &row, a, &inv.a));
            rep.push(Check::exact(id("b"), &row, b, &inv.b));
        }
        let tm = monodromy_T(&inv)?;
        let n = nilpotent_N(&inv)?;
        let exp_n = unipotent_exp(&n)?;
        rep.push(Check::new(id("exp-N"), "exp of the monodromy logarithm is the monodromy", "T", if exp_n == tm { "T" } else { "differs" }, None, exp_n == tm));

        let two = rat(2, 1);
        let expected = [&inv.m / &two, &inv.m / &two, -&inv.a / rat(12, 1)];
        let got = [n.rat(2, 0), n.rat(3, 1), n.rat(3, 0)];
        let fmt = |v: &[exactlin::Rat]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        rep.push(Check::exact(id("N-entries"), "N(3,1) = N(4,2) = m/2 and N(4,1) = -a/12", fmt(&expected), fmt(&got)));

        let om = omega_lim(&inv)?;
        let shape = validate_omega_shape(&om, OmegaGroup::Sp4);
        let xi = PeriodEntry::xi(inv.b.clone(), 3);
        let shape_ok = shape.valid && shape.xi.as_ref() == Some(&xi);
        let got = match (&shape.xi, shape.valid) {
            (Some(x), true) => x.to_string(),
            _ => shape.failures.join("; "),
        };
        rep.push(Check::new(id("shape"), "limiting period matrix has the Sp(4) shape with extension class b Xi_3", &xi, got, None, shape_ok));

        let q = polarization_q();
        let g = gram(&xi_basis(&inv, &normalized_params(&inv)), &inv);
        rep.push(Check::new(id("gram"), "Mukai Gram matrix of the normalized basis is the standard symplectic form", "Q", if g == q { "Q" } else { "differs" }, None, g == q));
        let sym = symplectic_check(&tm, &q)?;
        rep.push(Check::new(id("T-symplectic"), "monodromy preserves the symplectic form", true, sym, None, sym));

        payload.push(cicy_report(&t.name, &t.data)?);
    }
    rep.put("geometries", payload);
    Ok(rep)
}
