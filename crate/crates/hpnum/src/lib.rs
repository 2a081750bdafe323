//! Arbitrary-precision reals with propagated error bounds, zeta values,
//! polylogarithms on `[0, 1]`, double-exponential quadrature, and the
//! iterated integrals `f_n` behind the hypergeometric constants.

pub mod consts;
mod error;
mod iterated;
mod logpoly;
mod polylog;
mod quad;
mod real;

pub use consts::{bernoulli, log2, pi, zeta, zeta1, zeta_nonpositive};
pub use error::HpError;
pub use iterated::{f_closed, f_closed_dist, f_iterated, f_step, verify_polylog_integral_lemmas, LemmaCheck, PolylogReport};
pub use logpoly::LogPoly;
pub use polylog::{li2, li3};
pub use quad::{tanh_sinh, tanh_sinh_to_infinity, tanh_sinh_width, Quad, QuadOptions};
pub use real::{BigReal, PrecisionCtx, Real};
