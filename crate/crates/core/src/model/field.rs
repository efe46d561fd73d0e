//! A complex wave function sampled on a grid.

use num_complex::Complex64;

use crate::error::ModelError;
use crate::model::grid::Grid;

#[derive(Debug, Clone)]
pub struct ComplexField {
    grid: Grid,
    values: Vec<Complex64>,
}

impl ComplexField {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self, ModelError> {
        if values.len() != grid.points() {
            return Err(ModelError::FieldGridMismatch {
                len: values.len(),
                points: grid.points(),
            });
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(ModelError::NonFiniteValue);
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Result<Self, ModelError> {
        let values = grid.xs().map(f).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// |psi|^2 at each sample.
    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }
}
