//! Special functions: gamma, erfc, Mittag-Leffler, fractional
//! differintegration and the confluent hypergeometric series.

pub mod differint;
pub mod erf;
pub mod gamma;
pub mod hyper;
pub mod mittag_leffler;

pub use differint::{
    caputo_monomial, rl_differintegrate_monomial, rl_integral_quadrature,
    rl_integral_quadrature_with_tol, PowerTerm,
};
pub use erf::{erf, erfc};
pub use gamma::{gamma, gamma_ratio, GAMMA_OVERFLOW};
pub use hyper::confluent_1f1;
pub use mittag_leffler::{
    ml_asymptotic, mittag_leffler, mittag_leffler_with_cap, AsymptoticRegime,
    MlArguments, ML_DEFAULT_TERM_CAP, ML_SERIES_RADIUS,
};
