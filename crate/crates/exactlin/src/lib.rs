//! Exact linear algebra over the truncated ring `Q + Q*Xi_w`, where `Xi_w`
//! stands for `zeta(w) / (2 pi i)^w`.
//!
//! Matrices are small and dense. Products of two transcendental entries are
//! refused rather than silently extended, so every result stays exact.

mod entry;
mod error;
mod filtration;
mod linalg;
mod matrix;
mod shape;
mod unipotent;

pub use entry::{rat, PeriodEntry, Rat};
pub use error::LinError;
pub use filtration::{weight_filtration, WeightFiltration};
pub use matrix::{EntryJson, MatrixJson, RatMatrix};
pub use shape::{polarization_q, symplectic_check, validate_omega_shape, OmegaGroup, ValidationReport};
pub use unipotent::{jordan_nilpotent, unipotent_exp, unipotent_log};
