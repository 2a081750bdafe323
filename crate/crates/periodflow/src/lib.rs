//! Period integrals of the iterated double-cover families near `t = 0`.
//!
//! All quadrature runs on real, positive integrands; factors of `i`, `2` and
//! `2 pi i` are carried as exponents and only applied when coefficients are compared.

mod asymptotics;
mod error;
mod fit;
mod integrals;
mod normalize;

pub use asymptotics::{asymptotics_d1, fit_pi_d, pi1_nilpotent, sample, D1Asymptotics, PI1_FACTOR, PI1_SHIFT};
pub use error::PeriodError;
pub use fit::{fit_log_poly, FitConfig, LogFit};
pub use hpnum::LogPoly;
pub use integrals::{big_pi_1, pi_1_direct, pi_d, pi_d_nested, vanishing_cycle_check, PhaseConvention, Phased};
pub use normalize::{bottom_row, bottom_row_exact, bottom_weight, denormalize, normalization_shift, normalize_local_coordinate, RowEntry};
