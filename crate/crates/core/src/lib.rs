//! Soliton dynamics of the Gross-Pitaevskii equation, solved by a
//! perturbation series in (possibly fractional) time, with the special
//! functions and reference integrators needed to trust the results.

pub mod dd;
pub mod error;
pub mod hpm;
pub mod integrator;
pub mod model;
pub mod special;
pub mod stencil;
