//! External potentials V(x).

use std::fmt;
use std::sync::Arc;

/// Real potential energy landscape.
#[derive(Clone)]
pub enum Potential {
    Zero,
    /// Optical lattice sin^2 x.
    PlusSinSquared,
    /// Inverted lattice -sin^2 x.
    MinusSinSquared,
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl Potential {
    pub fn value(&self, x: f64) -> f64 {
        match self {
            Potential::Zero => 0.0,
            Potential::PlusSinSquared => x.sin() * x.sin(),
            Potential::MinusSinSquared => -(x.sin() * x.sin()),
            Potential::Custom(f) => f(x),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Potential::Zero => "zero",
            Potential::PlusSinSquared => "plus-sin-squared",
            Potential::MinusSinSquared => "minus-sin-squared",
            Potential::Custom(_) => "custom",
        }
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Potential({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointwise_values() {
        for &x in &[-3.0, -0.7, 0.0, 0.4, 1.9, 6.0] {
            assert_eq!(Potential::Zero.value(x), 0.0);
            assert!((Potential::PlusSinSquared.value(x) - x.sin().powi(2)).abs() < 1e-15);
            assert!(
                (Potential::MinusSinSquared.value(x) + x.sin().powi(2)).abs() < 1e-15
            );
        }
    }

    #[test]
    fn custom_evaluator_is_used() {
        let v = Potential::Custom(Arc::new(|x| 0.5 * x * x));
        assert_eq!(v.value(2.0), 2.0);
        assert_eq!(v.name(), "custom");
    }
}
