//! Physical parameters of the condensate model.

/// hbar and mass must be positive; g's sign selects attractive (g < 0) or
/// repulsive (g > 0) interaction; mu is the chemical potential used by the
/// closed-form solitons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub mass: f64,
    pub g: f64,
    pub mu: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
            g: 1.0,
            mu: 1.0,
        }
    }
}

impl PhysicalConstants {
    pub fn with_interaction(g: f64, mu: f64) -> Self {
        Self {
            g,
            mu,
            ..Self::default()
        }
    }
}
