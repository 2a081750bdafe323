use exactlin::{validate_omega_shape, MatrixJson, OmegaGroup};
use serde::Serialize;

use crate::{chern_invariants, gram, monodromy_T, nilpotent_N, normalized_params, omega_lim, xi_basis, CicyData, MirrorError};

#[derive(Clone, Debug, Serialize)]
pub struct CicyReport {
    pub name: String,
    pub weights: Vec<u32>,
    pub degrees: Vec<u32>,
    pub m: String,
    pub a: String,
    pub b: String,
    pub omega_lim: MatrixJson,
    #[serde(rename = "T")]
    pub t: MatrixJson,
    #[serde(rename = "N")]
    pub n: MatrixJson,
    pub gram: MatrixJson,
    pub shape_valid: bool,
    pub shape_failures: Vec<String>,
}

pub fn cicy_report(name: &str, g: &CicyData) -> Result<CicyReport, MirrorError> {
    let inv = chern_invariants(g)?;
    let om = omega_lim(&inv)?;
    let shape = validate_omega_shape(&om, OmegaGroup::Sp4);
    Ok(CicyReport {
        name: name.to_string(),
        weights: g.weights.clone(),
        degrees: g.degrees.clone(),
        m: inv.m.to_string(),
        a: inv.a.to_string(),
        b: inv.b.to_string(),
        omega_lim: MatrixJson::from(&om),
        t: MatrixJson::from(&monodromy_T(&inv)?),
        n: MatrixJson::from(&nilpotent_N(&inv)?),
        gram: MatrixJson::from(&gram(&xi_basis(&inv, &normalized_params(&inv)), &inv)),
        shape_valid: shape.valid,
        shape_failures: shape.failures,
    })
}
