//! Characteristic-class pipeline for mirror CICY 3-folds: Chern numbers,
//! Gamma-hat class, Mukai pairing on K-theory, and the limiting period
//! matrix together with the monodromy `T` and its logarithm `N`.

mod cicy;
mod coh;
mod error;
mod lattice;
mod report;

pub use cicy::{chern_class_direct, chern_class_incremental, chern_invariants, find_geometry, registry, CicyData, CicyInvariants, Geometry};
pub use coh::{chern_character, coh_mul, gamma_hat, todd_class, CohClass};
pub use error::MirrorError;
pub use lattice::{
    gamma_lim_basis, gram, monodromy_T, mukai_pairing, nilpotent_N, normalized_params, omega_lim, structure_sheaf_ch, xi_basis,
    BasisParams, KClassCh, Sheaf,
};
pub use report::{cicy_report, CicyReport};
