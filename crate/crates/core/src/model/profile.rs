//! Spatial profiles f(x) with analytic second derivatives.
//!
//! These are the shapes the series engine separates from time; the engine
//! needs f'' in closed form, so custom profiles must bring their own.

use std::fmt;
use std::sync::Arc;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub enum Profile {
    Tanh,
    Sech,
    Cos,
    Custom {
        value: RealFn,
        second_derivative: RealFn,
    },
}

fn sech(x: f64) -> f64 {
    1.0 / x.cosh()
}

impl Profile {
    pub fn value(&self, x: f64) -> f64 {
        match self {
            Profile::Tanh => x.tanh(),
            Profile::Sech => sech(x),
            Profile::Cos => x.cos(),
            Profile::Custom { value, .. } => value(x),
        }
    }

    pub fn second_derivative(&self, x: f64) -> f64 {
        match self {
            Profile::Tanh => {
                let t = x.tanh();
                let s = sech(x);
                -2.0 * t * s * s
            }
            Profile::Sech => {
                let s = sech(x);
                s - 2.0 * s * s * s
            }
            Profile::Cos => -x.cos(),
            Profile::Custom {
                second_derivative, ..
            } => second_derivative(x),
        }
    }

    /// Where this shape lives: the window used for closure checks and plots.
    pub fn sample_interval(&self) -> (f64, f64) {
        match self {
            Profile::Cos => (0.0, std::f64::consts::TAU),
            _ => (-8.0, 8.0),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Profile::Tanh => "tanh",
            Profile::Sech => "sech",
            Profile::Cos => "cos",
            Profile::Custom { .. } => "custom",
        }
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Profile({})", self.name())
    }
}
