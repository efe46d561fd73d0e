//! Confluent hypergeometric function 1F1(a; b; z) by direct series.
//!
//! Shares the double-double accumulator and conditioning guard of the
//! Mittag-Leffler evaluator; the one extra hazard here is the pole at
//! nonpositive integer b.

use num_complex::Complex64;

use crate::dd::{CDd, Dd};
use crate::error::SpecialError;
use crate::special::mittag_leffler::ML_SERIES_RADIUS;

const F11_TERM_CAP: usize = 10_000;

/// 1F1(a; b; z) = sum_k (a)_k / (b)_k z^k / k! to absolute accuracy `tol`.
pub fn confluent_1f1(
    a: f64,
    b: f64,
    z: Complex64,
    tol: f64,
) -> Result<Complex64, SpecialError> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(SpecialError::NonFiniteArgument(a + b));
    }
    if b <= 0.0 && b == b.floor() {
        return Err(SpecialError::HypergeometricPole(b));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(SpecialError::NonFiniteArgument(z.norm()));
    }
    if z.norm() > ML_SERIES_RADIUS {
        return Err(SpecialError::MlArgumentTooLarge(z.norm()));
    }
    if !(tol.is_finite() && tol > 0.0 && tol <= 1e-3) {
        return Err(SpecialError::BadTolerance(tol));
    }

    let mut term = CDd::ONE;
    let mut sum = CDd::ZERO;
    let mut sum_abs = 0.0f64;
    let mut below_tol_streak = 0u32;
    for k in 0..F11_TERM_CAP {
        sum = sum.add(term);
        let mag = term.abs_f64();
        sum_abs += mag;
        // The Pochhammer recurrence rounds (a+k) and (b+k) in f64, so the
        // achievable accuracy is ~1 ulp per unit of term magnitude.
        if !mag.is_finite() || sum_abs * 2e-16 > 0.5 * tol {
            return Err(SpecialError::SeriesConditionLoss {
                peak: sum_abs,
                tol,
            });
        }
        if mag <= 0.1 * tol {
            below_tol_streak += 1;
            if below_tol_streak >= 2 && k >= 1 {
                return Ok(sum.to_complex());
            }
        } else {
            below_tol_streak = 0;
        }
        let kf = k as f64;
        term = term
            .scale(a + kf)
            .mul_complex(z)
            .div_dd(Dd::from_f64(b + kf))
            .div_dd(Dd::from_f64(kf + 1.0));
    }
    Err(SpecialError::HypergeometricNoConvergence {
        tol,
        cap: F11_TERM_CAP,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::differint::rl_integral_quadrature;
    use crate::special::gamma::gamma;

    fn f11_real(a: f64, b: f64, x: f64) -> f64 {
        confluent_1f1(a, b, Complex64::new(x, 0.0), 1e-13).unwrap().re
    }

    #[test]
    fn zero_argument_is_one() {
        let got = confluent_1f1(2.3, 0.7, Complex64::new(0.0, 0.0), 1e-10).unwrap();
        assert_eq!(got, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn equal_parameters_reduce_to_exp() {
        for x in [-3.0, -0.5, 0.1, 2.0, 5.0] {
            let got = f11_real(1.0, 1.0, x);
            assert!((got - x.exp()).abs() <= 1e-12 * x.exp());
        }
        let z = Complex64::new(0.4, -1.3);
        let got = confluent_1f1(1.0, 1.0, z, 1e-13).unwrap();
        assert!((got - z.exp()).norm() <= 1e-12 * z.exp().norm());
    }

    #[test]
    fn frozen_reference_values() {
        assert!((f11_real(1.0, 0.5, 1.0) - 5.060_156_938_557_41).abs() <= 1e-12);
        assert!((f11_real(2.0, 3.0, 0.5) - 1.405_114_917_199_487_4).abs() <= 1e-13);
    }

    #[test]
    fn kummer_transformation_holds() {
        // 1F1(a; b; z) = e^z 1F1(b - a; b; -z)
        let (a, b, z) = (1.0, 1.5, 2.0);
        let lhs = f11_real(a, b, z);
        let rhs = z.exp() * f11_real(b - a, b, -z);
        assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs());
    }

    #[test]
    fn pole_parameters_are_refused() {
        for b in [0.0, -1.0, -3.0] {
            assert!(matches!(
                confluent_1f1(1.0, b, Complex64::new(0.5, 0.0), 1e-10),
                Err(SpecialError::HypergeometricPole(_))
            ));
        }
    }

    #[test]
    fn half_derivative_of_exp_identity() {
        // D^(1/2) e^t at t = 1 two ways: the closed form
        // t^(-1/2)/gamma(1/2) 1F1(1, 1/2, t), and the splitting
        // f(0) t^(-1/2)/gamma(1/2) + (fractional integral of f' by quadrature).
        let nu = 0.5;
        let t = 1.0f64;
        let closed =
            t.powf(-nu) / gamma(1.0 - nu).unwrap() * f11_real(1.0, 1.0 - nu, t);
        assert!((closed - 2.854_887_835_850_994_5).abs() <= 1e-12);

        let tail = rl_integral_quadrature(|s| Complex64::new(s.exp(), 0.0), 1.0 - nu, t)
            .unwrap()
            .re;
        let split = t.powf(-nu) / gamma(1.0 - nu).unwrap() + tail;
        assert!(((closed - split) / closed).abs() <= 1e-6);
    }
}
