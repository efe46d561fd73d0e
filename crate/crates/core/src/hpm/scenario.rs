//! Scenario descriptions consumed by the series engine.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::HpmError;
use crate::model::constants::PhysicalConstants;
use crate::model::grid::{Boundary, Grid};
use crate::model::potential::Potential;
use crate::model::profile::Profile;
use crate::stencil::StencilOrder;

/// How the spatial part of each iterate is represented.
#[derive(Debug, Clone)]
pub enum SpatialBackend {
    /// One complex scalar per iterate; requires the source to stay
    /// proportional to the initial profile.
    Profile,
    /// One sampled field per iterate; works for any scenario.
    Grid { grid: Grid, stencil: StencilOrder },
}

#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub profile: Profile,
    pub potential: Potential,
    pub constants: PhysicalConstants,
    pub alpha: f64,
    pub order: usize,
    pub backend: SpatialBackend,
}

impl ScenarioConfig {
    pub fn new(
        profile: Profile,
        potential: Potential,
        constants: PhysicalConstants,
        alpha: f64,
        order: usize,
        backend: SpatialBackend,
    ) -> Result<Self, HpmError> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha > 1.0 {
            return Err(HpmError::AlphaOutOfRange(alpha));
        }
        if order < 1 {
            return Err(HpmError::OrderTooSmall(order));
        }
        Ok(Self {
            profile,
            potential,
            constants,
            alpha,
            order,
            backend,
        })
    }
}

/// The four benchmark scenarios: free dark (tanh), free bright (sech),
/// and the two optical-lattice cosine cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalScenario {
    FreeDark,
    FreeBright,
    LatticeRepulsive,
    LatticeAttractive,
}

impl CanonicalScenario {
    pub const ALL: [CanonicalScenario; 4] = [
        CanonicalScenario::FreeDark,
        CanonicalScenario::FreeBright,
        CanonicalScenario::LatticeRepulsive,
        CanonicalScenario::LatticeAttractive,
    ];

    pub fn id(self) -> u8 {
        match self {
            CanonicalScenario::FreeDark => 1,
            CanonicalScenario::FreeBright => 2,
            CanonicalScenario::LatticeRepulsive => 3,
            CanonicalScenario::LatticeAttractive => 4,
        }
    }

    pub fn from_id(id: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }

    pub fn name(self) -> &'static str {
        match self {
            CanonicalScenario::FreeDark => "free-dark",
            CanonicalScenario::FreeBright => "free-bright",
            CanonicalScenario::LatticeRepulsive => "lattice-repulsive",
            CanonicalScenario::LatticeAttractive => "lattice-attractive",
        }
    }

    pub fn profile(self) -> Profile {
        match self {
            CanonicalScenario::FreeDark => Profile::Tanh,
            CanonicalScenario::FreeBright => Profile::Sech,
            _ => Profile::Cos,
        }
    }

    pub fn potential(self) -> Potential {
        match self {
            CanonicalScenario::FreeDark | CanonicalScenario::FreeBright => Potential::Zero,
            CanonicalScenario::LatticeRepulsive => Potential::PlusSinSquared,
            CanonicalScenario::LatticeAttractive => Potential::MinusSinSquared,
        }
    }

    /// Unit hbar and mass; g = +-1; mu fixed by the stationarity of the
    /// profile in the scenario's potential.
    pub fn constants(self) -> PhysicalConstants {
        let (g, mu) = match self {
            CanonicalScenario::FreeDark => (1.0, 1.0),
            CanonicalScenario::FreeBright => (-1.0, -0.5),
            CanonicalScenario::LatticeRepulsive => (1.0, 1.5),
            CanonicalScenario::LatticeAttractive => (-1.0, -0.5),
        };
        PhysicalConstants {
            g,
            mu,
            ..PhysicalConstants::default()
        }
    }

    /// The rate lambda in psi = f(x) E_alpha(-lambda t^alpha): i mu / hbar.
    pub fn closure_rate(self) -> Complex64 {
        Complex64::new(0.0, self.constants().mu)
    }

    /// Profile-backend configuration.
    pub fn config(self, alpha: f64, order: usize) -> Result<ScenarioConfig, HpmError> {
        ScenarioConfig::new(
            self.profile(),
            self.potential(),
            self.constants(),
            alpha,
            order,
            SpatialBackend::Profile,
        )
    }

    /// Grid-backend configuration on the scenario's natural domain:
    /// a 2 pi ring for the lattice cases, [-20, 20] fixed-zero otherwise.
    pub fn grid_config(
        self,
        alpha: f64,
        order: usize,
        points: usize,
        stencil: StencilOrder,
    ) -> Result<ScenarioConfig, HpmError> {
        let grid = match self {
            CanonicalScenario::LatticeRepulsive | CanonicalScenario::LatticeAttractive => {
                Grid::periodic(0.0, TAU, points)?
            }
            _ => Grid::new(-20.0, 20.0, points, Boundary::FixedZero)?,
        };
        ScenarioConfig::new(
            self.profile(),
            self.potential(),
            self.constants(),
            alpha,
            order,
            SpatialBackend::Grid { grid, stencil },
        )
    }
}
