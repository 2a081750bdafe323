//! Primed Pochhammer lattice sums and the constants built from them.
//!
//! Sums are evaluated in double precision over a ladder of growing boxes and
//! extrapolated in `K^-1/2`; exact bookkeeping (zeta products, powers of
//! `2 pi i`) stays symbolic and rational.

mod closed;
mod error;
mod eval;
mod identities;
mod named;
mod recognize;
mod reduced;
mod spec;
mod symbolic;

pub use closed::{
    even_zeta_over_pi_pow, even_zeta_over_two_pi_i, eval_zeta_poly, gamma_closed_poly, gamma_tilde_closed_poly,
    partition_coeffs, partition_poly, reduce_even_products, regrouping_residual, zeta_value, PartitionCoeff, Regrouping,
};
pub use error::SeriesError;
pub use eval::{eval_series, extrapolate, half_pochhammer_table, neville_at_zero, partial_sums, Ladder, SeriesValue};
pub use identities::{
    assemble_d3, assemble_d6, beta_delta_identity, beta_delta_tilde_identity, g2_closed_form, g2_combination, g2_identity,
    gammas_to_zetas, partial_d6, partial_d6_raw, region1_d6_symbolic, region1_d6_zeta5_part, region1_poly_d6,
    region_poly_d3, region_poly_d3_symbolic, region_polys_d3, theorem_d3, CoeffCheck, D3Tolerance, IdentityReport,
    PartialD6, TheoremD3,
};
pub use named::{
    gamma_n, gamma_spec, gamma_tilde_n, gamma_tilde_spec, named_constant, ConstantTable, Ladders, Mode, NamedConstant,
    Source,
};
pub use recognize::{best_rational, recognize_rational};
pub use reduced::reduced_constant;
pub use spec::{DenFactor, Scale, SeriesSpec};
pub use symbolic::{Monomial, Poly, Sym, SymLogPoly};
