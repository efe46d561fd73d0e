//! Uniform 1-D spatial grids.

use crate::error::ModelError;

/// What the edges of the domain mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// The field is pinned to zero beyond the edges.
    FixedZero,
    /// The last point wraps onto the first; use only with 2 pi periodic
    /// potentials and profiles (the cos / sin^2 x cases).
    Periodic,
}

/// Uniformly spaced grid on [x_min, x_max] with one sample per point.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    points: usize,
    boundary: Boundary,
}

impl Grid {
    pub fn new(
        x_min: f64,
        x_max: f64,
        points: usize,
        boundary: Boundary,
    ) -> Result<Grid, ModelError> {
        if points < 8 {
            return Err(ModelError::TooFewPoints(points));
        }
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(ModelError::BadBounds { x_min, x_max });
        }
        Ok(Grid {
            x_min,
            x_max,
            points,
            boundary,
        })
    }

    /// Periodic grid covering one period without duplicating the seam:
    /// x_max lands one spacing short of x_min + period.
    pub fn periodic(x_min: f64, period: f64, points: usize) -> Result<Grid, ModelError> {
        if !(period.is_finite() && period > 0.0) {
            return Err(ModelError::BadBounds {
                x_min,
                x_max: x_min + period,
            });
        }
        let x_max = x_min + period * (points as f64 - 1.0) / points as f64;
        Grid::new(x_min, x_max, points, Boundary::Periodic)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points as f64 - 1.0)
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.spacing()
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.x(i))
    }

    /// Length the quadrature sees: the wrap-around cell counts for periodic
    /// grids.
    pub fn extent(&self) -> f64 {
        match self.boundary {
            Boundary::FixedZero => self.x_max - self.x_min,
            Boundary::Periodic => self.spacing() * self.points as f64,
        }
    }
}
