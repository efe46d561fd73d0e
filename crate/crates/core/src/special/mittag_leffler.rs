//! Two-parameter Mittag-Leffler function E_{alpha,beta}(z) and the two
//! closed-form relaxation asymptotes attached to it.
//!
//! The series
//!
//! ```text
//! E_{alpha,beta}(z) = sum_{n>=0} z^n / gamma(alpha n + beta)
//! ```
//!
//! is entire, but naive floating summation dies of cancellation well inside
//! the region of physical interest (z on the negative axis or near the
//! negative imaginary axis).  Terms and the accumulator are therefore carried
//! in double-double precision, and a conditioning guard refuses any request
//! whose accumulated term magnitude would drown the answer even at ~31
//! digits.  Arguments outside |z| <= 25 are rejected outright; asymptotic
//! regimes are served by [`ml_asymptotic`], never by extrapolating the series.

use num_complex::Complex64;

use crate::dd::{CDd, Dd};
use crate::error::SpecialError;
use crate::special::gamma::gamma;

/// Hard radius for the series evaluator.
pub const ML_SERIES_RADIUS: f64 = 25.0;

/// Default term cap before giving up on convergence.
pub const ML_DEFAULT_TERM_CAP: usize = 10_000;

/// Validated argument bundle for E_{alpha,beta}(z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlArguments {
    alpha: f64,
    beta: f64,
    z: Complex64,
}

impl MlArguments {
    /// Requires alpha > 0, beta > 0 and finite z.
    pub fn new(alpha: f64, beta: f64, z: Complex64) -> Result<Self, SpecialError> {
        if !(alpha.is_finite() && beta.is_finite() && alpha > 0.0 && beta > 0.0) {
            return Err(SpecialError::MlBadParameters { alpha, beta });
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(SpecialError::NonFiniteArgument(z.norm()));
        }
        Ok(MlArguments { alpha, beta, z })
    }

    /// One-parameter form E_alpha(z) = E_{alpha,1}(z).
    pub fn one_parameter(alpha: f64, z: Complex64) -> Result<Self, SpecialError> {
        Self::new(alpha, 1.0, z)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }
}

fn check_tol(tol: f64) -> Result<(), SpecialError> {
    if !(tol.is_finite() && tol > 0.0 && tol <= 1e-3) {
        return Err(SpecialError::BadTolerance(tol));
    }
    Ok(())
}

/// E_{alpha,beta}(z) by direct Taylor summation, absolute accuracy `tol`,
/// with the default 10 000-term cap.
pub fn mittag_leffler(args: MlArguments, tol: f64) -> Result<Complex64, SpecialError> {
    mittag_leffler_with_cap(args, tol, ML_DEFAULT_TERM_CAP)
}

/// Same as [`mittag_leffler`] with an explicit term cap.
pub fn mittag_leffler_with_cap(
    args: MlArguments,
    tol: f64,
    cap: usize,
) -> Result<Complex64, SpecialError> {
    check_tol(tol)?;
    let MlArguments { alpha, beta, z } = args;
    if z.norm() > ML_SERIES_RADIUS {
        return Err(SpecialError::MlArgumentTooLarge(z.norm()));
    }
    if z.norm() == 0.0 {
        return Ok(Complex64::new(1.0 / gamma(beta)?, 0.0));
    }

    let mut ladder = GammaLadder::new(alpha, beta)?;
    // Achievable accuracy per unit of accumulated term magnitude: an
    // integer-seeded ladder is exact at double-double working precision, an
    // f64-seeded lattice carries its ~1 ulp seed errors, and the per-term
    // fallback is only as accurate as the gamma evaluator itself.
    let roundoff = if ladder.exact {
        1e-30
    } else if ladder.lattice {
        2e-16
    } else {
        1e-15
    };

    let mut power = CDd::ONE; // z^n
    let mut sum = CDd::ZERO;
    let mut sum_abs = 0.0f64;
    let mut below_tol_streak = 0u32;

    for n in 0..cap {
        let gamma_dd = ladder.next()?;
        if !gamma_dd.hi.is_finite() {
            // gamma overflowed f64.  The remaining terms are negligible only
            // if they were already below tolerance and still shrinking.
            let shrinking = z.norm() < 0.5 * (alpha * n as f64 + beta).powf(alpha);
            if below_tol_streak > 0 && shrinking {
                return Ok(sum.to_complex());
            }
            return Err(SpecialError::MlNoConvergence { tol, cap });
        }
        let term = power.div_dd(gamma_dd);
        sum = sum.add(term);
        let mag = term.abs_f64();
        sum_abs += mag;
        // Conditioning guard: once the accumulated term magnitude runs this
        // far above the requested accuracy, the digits are gone for good
        // (sum_abs only grows).
        if !mag.is_finite() || sum_abs * roundoff > 0.5 * tol {
            return Err(SpecialError::SeriesConditionLoss {
                peak: sum_abs,
                tol,
            });
        }
        if mag <= 0.1 * tol {
            below_tol_streak += 1;
            if below_tol_streak >= 2 && n >= 1 {
                return Ok(sum.to_complex());
            }
        } else {
            below_tol_streak = 0;
        }

        power = power.mul_complex(z);
    }
    Err(SpecialError::MlNoConvergence { tol, cap })
}

/// Supplies gamma(alpha n + beta) for n = 0, 1, 2, ... at double-double
/// working precision wherever possible.
///
/// When alpha is (within 1e-9) a fraction p/q with q <= 64, the arguments
/// fall on q arithmetic ladders of integer stride p; each ladder is advanced
/// multiplicatively in double-double from one f64 seed, so every value
/// carries only the seed's rounding as relative error.  Irrational-looking
/// alpha falls back to per-term evaluation at f64 accuracy.
struct GammaLadder {
    chains: Vec<Dd>,
    args: Vec<f64>,
    stride: usize,
    next_term: usize,
    lattice: bool,
    exact: bool,
    alpha: f64,
    beta: f64,
}

impl GammaLadder {
    fn new(alpha: f64, beta: f64) -> Result<GammaLadder, SpecialError> {
        let seed = |x: f64| -> Result<Dd, SpecialError> {
            match gamma(x) {
                Ok(g) => Ok(Dd::from_f64(g)),
                Err(SpecialError::GammaOverflow(_)) => Ok(Dd::from_f64(f64::INFINITY)),
                Err(e) => Err(e),
            }
        };
        for q in 1..=64usize {
            let p = (alpha * q as f64).round();
            if p >= 1.0 && (alpha * q as f64 - p).abs() < 1e-9 {
                // Integer alpha with integer beta can be seeded by an exact
                // double-double factorial, removing the seed rounding that
                // otherwise limits cross-chain cancellation.
                let exact = q == 1 && beta == beta.floor() && beta >= 1.0 && beta <= 170.0;
                let mut chains = Vec::with_capacity(q);
                let mut args = Vec::with_capacity(q);
                for j in 0..q {
                    let a = beta + alpha * j as f64;
                    if exact {
                        let mut g = Dd::ONE;
                        let mut m = 1.0;
                        while m < a {
                            g = g.mul_f64(m);
                            m += 1.0;
                        }
                        chains.push(g);
                    } else {
                        chains.push(seed(a)?);
                    }
                    args.push(a);
                }
                return Ok(GammaLadder {
                    chains,
                    args,
                    stride: p as usize,
                    next_term: 0,
                    lattice: true,
                    exact,
                    alpha,
                    beta,
                });
            }
        }
        Ok(GammaLadder {
            chains: vec![seed(beta)?],
            args: vec![beta],
            stride: 0,
            next_term: 0,
            lattice: false,
            exact: false,
            alpha,
            beta,
        })
    }

    fn next(&mut self) -> Result<Dd, SpecialError> {
        let n = self.next_term;
        self.next_term += 1;
        if self.lattice {
            let q = self.chains.len();
            let j = n % q;
            let out = self.chains[j];
            if out.hi.is_finite() {
                let mut g = out;
                let mut a = self.args[j];
                for _ in 0..self.stride {
                    g = g.mul_f64(a);
                    a += 1.0;
                }
                self.chains[j] = g;
                self.args[j] = a;
            }
            Ok(out)
        } else {
            match gamma(self.alpha * n as f64 + self.beta) {
                Ok(g) => Ok(Dd::from_f64(g)),
                Err(SpecialError::GammaOverflow(_)) => Ok(Dd::from_f64(f64::INFINITY)),
                Err(e) => Err(e),
            }
        }
    }
}

/// Which end of the relaxation curve an asymptote describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticRegime {
    /// Stretched exponential exp(-x^alpha / gamma(1 + alpha)), x = t/tau -> 0.
    ShortTime,
    /// Inverse power law x^(-alpha) / gamma(1 - alpha), x = t/tau -> inf.
    LongTime,
}

/// Closed-form asymptotes of the relaxation function E_alpha(-(t/tau)^alpha).
///
/// `time_ratio` is x = t/tau.  The long-time branch has no alpha = 1 limit
/// (gamma(0) pole): ordinary exponential relaxation has no power-law tail.
pub fn ml_asymptotic(
    alpha: f64,
    time_ratio: f64,
    regime: AsymptoticRegime,
) -> Result<f64, SpecialError> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha <= 1.0) {
        return Err(SpecialError::AsymptoticDomain(format!(
            "alpha = {alpha} outside (0, 1]"
        )));
    }
    if !time_ratio.is_finite() || time_ratio < 0.0 {
        return Err(SpecialError::AsymptoticDomain(format!(
            "time ratio {time_ratio} must be finite and >= 0"
        )));
    }
    match regime {
        AsymptoticRegime::ShortTime => {
            Ok((-time_ratio.powf(alpha) / gamma(1.0 + alpha)?).exp())
        }
        AsymptoticRegime::LongTime => {
            if alpha == 1.0 {
                return Err(SpecialError::AsymptoticDomain(
                    "the power-law tail degenerates at alpha = 1 (gamma(0) pole)".into(),
                ));
            }
            if time_ratio == 0.0 {
                return Err(SpecialError::AsymptoticDomain(
                    "long-time branch needs t/tau > 0".into(),
                ));
            }
            Ok(time_ratio.powf(-alpha) / gamma(1.0 - alpha)?)
        }
    }
}
