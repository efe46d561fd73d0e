//! Fractional differintegration of power terms, plus a quadrature oracle.
//!
//! Everything the series engine needs is the exact rule
//!
//! ```text
//! D^nu [c t^mu] = c gamma(1 + mu) / gamma(1 + mu - nu) t^(mu - nu)
//! ```
//!
//! (nu > 0 differentiates, nu < 0 integrates, both in the Riemann-Liouville
//! sense from 0).  [`rl_integral_quadrature`] integrates the defining
//! convolution numerically and exists to keep the rule honest; the Caputo
//! variant differs only in killing polynomial terms below the order.

use num_complex::Complex64;

use crate::error::SpecialError;
use crate::special::gamma::{gamma, gamma_ratio};

/// One term c * t^e of a (possibly fractional) power series in time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTerm {
    pub coefficient: Complex64,
    pub exponent: f64,
}

impl PowerTerm {
    pub fn new(coefficient: Complex64, exponent: f64) -> Self {
        PowerTerm {
            coefficient,
            exponent,
        }
    }

    pub fn real(coefficient: f64, exponent: f64) -> Self {
        Self::new(Complex64::new(coefficient, 0.0), exponent)
    }

    /// Value at time t >= 0, with the usual t^0 = 1 at t = 0.
    pub fn evaluate(&self, t: f64) -> Complex64 {
        if self.exponent == 0.0 {
            self.coefficient
        } else {
            self.coefficient * t.powf(self.exponent)
        }
    }

    fn validate(&self) -> Result<(), SpecialError> {
        if !(self.coefficient.re.is_finite() && self.coefficient.im.is_finite()) {
            return Err(SpecialError::NonFiniteArgument(self.coefficient.norm()));
        }
        if !(self.exponent.is_finite() && self.exponent > -1.0) {
            return Err(SpecialError::ExponentOutOfRange(self.exponent));
        }
        Ok(())
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Riemann-Liouville differintegral of a power term (derivative for nu > 0,
/// integral for nu < 0).
///
/// Integer nu >= 0 reproduces the classical m!/(m-n)! derivative rule.  When
/// 1 + mu - nu lands on a gamma pole the value is not representable as a
/// power term and the call is refused, unless the coefficient is already
/// zero.
pub fn rl_differintegrate_monomial(
    nu: f64,
    term: PowerTerm,
) -> Result<PowerTerm, SpecialError> {
    term.validate()?;
    if !nu.is_finite() {
        return Err(SpecialError::NonFiniteArgument(nu));
    }
    let mu = term.exponent;
    let arg = 1.0 + mu - nu;
    if term.coefficient.norm() == 0.0 {
        return Ok(PowerTerm::new(Complex64::new(0.0, 0.0), mu - nu));
    }
    if is_nonpositive_integer(arg) {
        return Err(SpecialError::DifferintegralPole { mu, nu, arg });
    }
    let ratio = gamma_ratio(1.0 + mu, arg)?;
    Ok(PowerTerm::new(term.coefficient * ratio, mu - nu))
}

/// Caputo derivative of a power term for order alpha > 0.
///
/// With n the smallest integer >= alpha, integer exponents below n are
/// annihilated (constants in particular); everything else follows the same
/// gamma-ratio ladder as the Riemann-Liouville form.
pub fn caputo_monomial(alpha: f64, term: PowerTerm) -> Result<PowerTerm, SpecialError> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(SpecialError::NonFiniteArgument(alpha));
    }
    if !(term.coefficient.re.is_finite() && term.coefficient.im.is_finite()) {
        return Err(SpecialError::NonFiniteArgument(term.coefficient.norm()));
    }
    let mu = term.exponent;
    if !(mu.is_finite() && mu >= 0.0) {
        return Err(SpecialError::CaputoExponent(mu));
    }
    let n = alpha.ceil();
    let integer_mu = mu == mu.floor();
    if integer_mu && mu < n {
        return Ok(PowerTerm::new(Complex64::new(0.0, 0.0), mu - alpha));
    }
    if !integer_mu && mu < n - 1.0 {
        return Err(SpecialError::CaputoNotIntegrable { mu, limit: n - 1.0 });
    }
    let ratio = gamma_ratio(1.0 + mu, 1.0 + mu - alpha)?;
    Ok(PowerTerm::new(term.coefficient * ratio, mu - alpha))
}

/// Default relative tolerance for the refinement loop of the quadrature.
pub const QUADRATURE_DEFAULT_TOL: f64 = 1e-7;
const QUADRATURE_START_PANELS: usize = 64;
const QUADRATURE_MAX_PANELS: usize = 1 << 20;

/// Riemann-Liouville fractional integral (1/gamma(alpha)) int_0^t
/// (t-s)^(alpha-1) f(s) ds by product integration: the singular kernel is
/// integrated exactly on each panel against a linear interpolant of f, and
/// panels double until two refinements agree to `rel_tol`.
pub fn rl_integral_quadrature_with_tol<F>(
    f: F,
    alpha: f64,
    t: f64,
    rel_tol: f64,
) -> Result<Complex64, SpecialError>
where
    F: Fn(f64) -> Complex64,
{
    if !(alpha.is_finite() && alpha > 0.0 && alpha <= 1.0) {
        return Err(SpecialError::QuadratureAlpha(alpha));
    }
    if !(t.is_finite() && t > 0.0) {
        return Err(SpecialError::QuadratureHorizon(t));
    }
    if !(rel_tol.is_finite() && rel_tol > 0.0 && rel_tol <= 1e-3) {
        return Err(SpecialError::BadTolerance(rel_tol));
    }

    let mut panels = QUADRATURE_START_PANELS;
    let mut previous: Option<Complex64> = None;
    while panels <= QUADRATURE_MAX_PANELS {
        let value = product_integral(&f, alpha, t, panels)?;
        if let Some(prev) = previous {
            let diff = (value - prev).norm();
            if diff <= rel_tol * value.norm() || diff <= 1e-14 {
                return Ok(value);
            }
        }
        previous = Some(value);
        panels *= 2;
    }
    Err(SpecialError::QuadratureNoConvergence {
        tol: rel_tol,
        panels: QUADRATURE_MAX_PANELS,
    })
}

/// [`rl_integral_quadrature_with_tol`] at the default tolerance.
pub fn rl_integral_quadrature<F>(f: F, alpha: f64, t: f64) -> Result<Complex64, SpecialError>
where
    F: Fn(f64) -> Complex64,
{
    rl_integral_quadrature_with_tol(f, alpha, t, QUADRATURE_DEFAULT_TOL)
}

fn product_integral<F>(
    f: &F,
    alpha: f64,
    t: f64,
    panels: usize,
) -> Result<Complex64, SpecialError>
where
    F: Fn(f64) -> Complex64,
{
    let h = t / panels as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut f_left = f(0.0);
    for j in 0..panels {
        let s_left = j as f64 * h;
        let s_right = if j + 1 == panels { t } else { (j + 1) as f64 * h };
        let f_right = f(s_right);
        // Kernel distances u = t - s, decreasing from b to a across the panel.
        let b = t - s_left;
        let a = t - s_right;
        let (pow_a, pow_a1) = if a == 0.0 {
            (0.0, 0.0)
        } else {
            (a.powf(alpha), a.powf(alpha + 1.0))
        };
        let pow_b = b.powf(alpha);
        let pow_b1 = b.powf(alpha + 1.0);
        let m0 = (pow_b - pow_a) / alpha;
        let m1 = b * m0 - (pow_b1 - pow_a1) / (alpha + 1.0);
        sum += f_left * m0 + (f_right - f_left) * (m1 / h);
        f_left = f_right;
    }
    if !(sum.re.is_finite() && sum.im.is_finite()) {
        return Err(SpecialError::NonFiniteArgument(sum.norm()));
    }
    Ok(sum / gamma(alpha)?)
}
