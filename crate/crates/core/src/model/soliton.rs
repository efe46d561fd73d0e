//! Closed-form soliton solutions used as ground truth.

use num_complex::Complex64;

use crate::error::ModelError;
use crate::model::constants::PhysicalConstants;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolitonKind {
    Dark,
    Bright,
}

fn phase(c: &PhysicalConstants, t: f64) -> Complex64 {
    Complex64::from_polar(1.0, -c.mu * t / c.hbar)
}

/// sqrt(mu/g) tanh(sqrt(mu) x) e^{-i mu t / hbar}; density minimum at x = 0.
pub fn dark_soliton(c: &PhysicalConstants, x: f64, t: f64) -> Result<Complex64, ModelError> {
    if c.g <= 0.0 || c.mu <= 0.0 {
        return Err(ModelError::DarkSolitonDomain { mu: c.mu, g: c.g });
    }
    let amplitude = (c.mu / c.g).sqrt();
    Ok(amplitude * (c.mu.sqrt() * x).tanh() * phase(c, t))
}

/// sqrt(mu/|g|) sech(sqrt(mu) x) e^{-i mu t / hbar}; density maximum at x = 0.
///
/// The amplitude divides by |g| so that it stays real for the attractive
/// (g < 0) interaction the bright soliton belongs to.
pub fn bright_soliton(c: &PhysicalConstants, x: f64, t: f64) -> Result<Complex64, ModelError> {
    if c.mu <= 0.0 || c.g == 0.0 {
        return Err(ModelError::BrightSolitonDomain { mu: c.mu, g: c.g });
    }
    let amplitude = (c.mu / c.g.abs()).sqrt();
    Ok(amplitude / (c.mu.sqrt() * x).cosh() * phase(c, t))
}

/// Stationary profile carried along x = v t + x0, same phase factor.
pub fn traveling_soliton(
    kind: SolitonKind,
    c: &PhysicalConstants,
    v: f64,
    x0: f64,
    x: f64,
    t: f64,
) -> Result<Complex64, ModelError> {
    let arg = x - v * t - x0;
    match kind {
        SolitonKind::Dark => dark_soliton(c, arg, t),
        SolitonKind::Bright => bright_soliton(c, arg, t),
    }
}
