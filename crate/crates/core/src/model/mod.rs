//! Problem geometry: grids, potentials, profiles, fields, closed-form
//! solitons, and the condensate functionals.

pub mod constants;
pub mod field;
pub mod functionals;
pub mod grid;
pub mod potential;
pub mod profile;
pub mod soliton;

pub use constants::PhysicalConstants;
pub use field::ComplexField;
pub use functionals::{
    chemical_potential_functional, energy_functional, gradient, norm_functional, ChemicalPotential,
};
pub use grid::{Boundary, Grid};
pub use potential::Potential;
pub use profile::Profile;
pub use soliton::{bright_soliton, dark_soliton, traveling_soliton, SolitonKind};
