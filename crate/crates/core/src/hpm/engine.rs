//! The iterative series engine.
//!
//! Each iterate j is built from the previous one by applying the source
//! operator and a fractional time integration, which on monomials is just a
//! ratio of gamma values: phi_j = c_j(x) t^{j alpha} with
//! c_j = (i/hbar) s_{j-1} Gamma((j-1) alpha + 1) / Gamma(j alpha + 1).
//!
//! The cubic term is evaluated against the frozen initial density
//! |phi_0|^2: the full Hermitian composition sum (see `cubic_convolution`)
//! coincides with it order by order at alpha = 1 but stops closing on the
//! profile at fractional alpha by its third step, while the frozen form
//! keeps every scenario with a stationary profile closed for all alpha and
//! reproduces the same coefficient tables where both apply.

use num_complex::Complex64;

use crate::dd::{CDd, Dd};
use crate::error::HpmError;
use crate::hpm::closure::{detect_ml_closure, ClosureReport};
use crate::hpm::scenario::{ScenarioConfig, SpatialBackend};
use crate::model::constants::PhysicalConstants;
use crate::model::field::ComplexField;
use crate::model::grid::Grid;
use crate::model::potential::Potential;
use crate::model::profile::Profile;
use crate::special::gamma_ratio;
use crate::stencil::{laplacian, StencilOrder};

/// Relative spread of S/f beyond which the profile backend refuses to run.
pub const PROFILE_CLOSURE_TOL: f64 = 1e-8;
/// Sample count for the closure check and residual diagnostics.
pub const PROFILE_SAMPLE_COUNT: usize = 64;
/// Samples with |f| at or below this are excluded from ratio checks.
pub const PROFILE_ZERO_GUARD: f64 = 1e-3;
/// Last-term-to-sum ratio that marks an evaluation as extrapolated.
pub const EXTRAPOLATION_WARNING_RATIO: f64 = 1e-3;

/// Spatial coefficients, one per iterate j; iterate j always carries the
/// time factor t^{j alpha}, which is why no exponents are stored.
#[derive(Debug, Clone)]
pub enum Iterates {
    /// phi_j = c_j f(x) t^{j alpha}.
    Scalars(Vec<Complex64>),
    /// phi_j = c_j(x) t^{j alpha} with c_j sampled on the grid.
    Fields(Vec<ComplexField>),
}

#[derive(Debug, Clone)]
pub struct SeriesSolution {
    config: ScenarioConfig,
    iterates: Iterates,
    closure: Option<ClosureReport>,
    // High-precision twin of the scalar ladder; the f64 table is this one
    // rounded. Residual diagnostics need the extra digits because the
    // residual of an order-N truncation sits near t^N, far below f64
    // roundoff on the leading coefficients at small t.
    pub(crate) dd_scalars: Option<Vec<CDd>>,
}

#[derive(Debug, Clone, Copy)]
pub enum SamplePoint {
    X(f64),
    Index(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct SeriesEvaluation {
    pub value: Complex64,
    /// The last kept term exceeds `EXTRAPOLATION_WARNING_RATIO` of the
    /// partial sum; the truncation cannot be trusted at this t.
    pub extrapolation_warning: bool,
}

impl SeriesSolution {
    pub fn config(&self) -> &ScenarioConfig {
        &self.config
    }

    pub fn iterates(&self) -> &Iterates {
        &self.iterates
    }

    /// Truncation order N: number of iterates beyond the initial one.
    pub fn order(&self) -> usize {
        match &self.iterates {
            Iterates::Scalars(c) => c.len() - 1,
            Iterates::Fields(f) => f.len() - 1,
        }
    }

    pub fn closure(&self) -> Option<&ClosureReport> {
        self.closure.as_ref()
    }

    /// Scalar coefficient table: stored directly by the profile backend,
    /// obtained by projecting each field onto the initial profile for the
    /// grid backend.
    pub fn coefficient_table(&self) -> Vec<Complex64> {
        match &self.iterates {
            Iterates::Scalars(c) => c.clone(),
            Iterates::Fields(fields) => {
                let f0 = fields[0].values();
                let denom: f64 = f0.iter().map(|v| v.norm_sqr()).sum();
                fields
                    .iter()
                    .map(|field| {
                        let num: Complex64 = f0
                            .iter()
                            .zip(field.values())
                            .map(|(a, b)| a.conj() * b)
                            .sum();
                        num / denom
                    })
                    .collect()
            }
        }
    }

    /// Wrap an externally supplied scalar table (oracle tables, negative
    /// controls, perturbation probes). The table length must be order + 1.
    pub fn from_profile_scalars(
        config: ScenarioConfig,
        scalars: Vec<Complex64>,
    ) -> Result<Self, HpmError> {
        if !matches!(config.backend, SpatialBackend::Profile) {
            return Err(HpmError::SampleKindMismatch);
        }
        if scalars.len() < 2 {
            return Err(HpmError::OrderTooSmall(scalars.len().saturating_sub(1)));
        }
        if scalars.len() != config.order + 1 {
            return Err(HpmError::TermsOutOfRange {
                requested: scalars.len() - 1,
                available: config.order,
            });
        }
        if let Some(step) = scalars.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(HpmError::NonFiniteIterate { step });
        }
        if scalars[0].norm() == 0.0 {
            return Err(HpmError::DegenerateCoefficients(0));
        }
        let dd = scalars.iter().map(|&c| CDd::from_complex(c)).collect();
        Ok(Self {
            config,
            iterates: Iterates::Scalars(scalars),
            closure: None,
            dd_scalars: Some(dd),
        })
    }

    /// Partial sum through iterate `terms` at one space point.
    pub fn evaluate(
        &self,
        at: SamplePoint,
        t: f64,
        terms: usize,
    ) -> Result<SeriesEvaluation, HpmError> {
        if !(t >= 0.0) {
            return Err(HpmError::NegativeTime(t));
        }
        if terms > self.order() {
            return Err(HpmError::TermsOutOfRange {
                requested: terms,
                available: self.order(),
            });
        }
        let spatial: Vec<Complex64> = match (&self.iterates, at) {
            (Iterates::Scalars(c), SamplePoint::X(x)) => {
                let f = self.config.profile.value(x);
                c[..=terms].iter().map(|cj| cj * f).collect()
            }
            (Iterates::Fields(fields), SamplePoint::Index(i)) => {
                fields[..=terms].iter().map(|field| field.values()[i]).collect()
            }
            _ => return Err(HpmError::SampleKindMismatch),
        };
        let alpha = self.config.alpha;
        let mut value = Complex64::new(0.0, 0.0);
        let mut last = 0.0;
        for (j, cj) in spatial.iter().enumerate() {
            let term = cj * t.powf(j as f64 * alpha);
            value += term;
            last = term.norm();
        }
        let extrapolation_warning =
            terms >= 1 && last > EXTRAPOLATION_WARNING_RATIO * value.norm();
        Ok(SeriesEvaluation {
            value,
            extrapolation_warning,
        })
    }
}

/// Free-function spelling of [`SeriesSolution::evaluate`].
pub fn evaluate_series(
    sol: &SeriesSolution,
    at: SamplePoint,
    t: f64,
    terms: usize,
) -> Result<SeriesEvaluation, HpmError> {
    sol.evaluate(at, t, terms)
}

/// Midpoint samples across the profile's natural window.
pub(crate) fn profile_samples(profile: &Profile, count: usize) -> Vec<f64> {
    let (lo, hi) = profile.sample_interval();
    (0..count)
        .map(|k| lo + (hi - lo) * (k as f64 + 0.5) / count as f64)
        .collect()
}

/// (hbar^2/2m) f'' - V f - g f^3 expressed through the value of f alone,
/// in double-double. Available when both f'' and V reduce to polynomials
/// in f: the built-in shapes, plus the lattice potentials via
/// sin^2 = 1 - cos^2 when the profile is cos. None otherwise.
///
/// Evaluating the source this way keeps it algebraically consistent with
/// the sampled f to double-double precision, which the residual
/// diagnostics depend on.
pub(crate) fn dd_source_basis(
    profile: &Profile,
    potential: &Potential,
    constants: &PhysicalConstants,
    f: Dd,
) -> Option<Dd> {
    let f2 = f.mul(f);
    let f3 = f2.mul(f);
    let fpp = match profile {
        Profile::Tanh => f3.sub(f).mul_f64(2.0),
        Profile::Sech => f.sub(f3.mul_f64(2.0)),
        Profile::Cos => f.neg(),
        Profile::Custom { .. } => return None,
    };
    let vf = match potential {
        Potential::Zero => Dd::ZERO,
        Potential::PlusSinSquared => match profile {
            Profile::Cos => Dd::ONE.sub(f2).mul(f),
            _ => return None,
        },
        Potential::MinusSinSquared => match profile {
            Profile::Cos => Dd::ONE.sub(f2).mul(f).neg(),
            _ => return None,
        },
        Potential::Custom(_) => return None,
    };
    let kin = constants.hbar * constants.hbar / (2.0 * constants.mass);
    Some(fpp.mul_f64(kin).sub(vf).sub(f3.mul_f64(constants.g)))
}

/// Gamma((j-1) alpha + 1) / Gamma(j alpha + 1) as double-double; exact
/// 1/j at alpha = 1.
fn dd_gamma_step(alpha: f64, j: usize) -> Result<Dd, HpmError> {
    if alpha == 1.0 {
        Ok(Dd::ONE.div_f64(j as f64))
    } else {
        let jf = j as f64;
        let r = gamma_ratio((jf - 1.0) * alpha + 1.0, jf * alpha + 1.0)
            .map_err(HpmError::Special)?;
        Ok(Dd::from_f64(r))
    }
}

/// Run the recursion for the configured scenario.
pub fn hpm_iterate(config: ScenarioConfig) -> Result<SeriesSolution, HpmError> {
    let mut sol = match config.backend.clone() {
        SpatialBackend::Profile => profile_iterate(config)?,
        SpatialBackend::Grid { grid, stencil } => grid_iterate(config, grid, stencil)?,
    };
    if sol.order() >= 2 {
        sol.closure = detect_ml_closure(&sol).ok();
    }
    Ok(sol)
}

fn profile_iterate(config: ScenarioConfig) -> Result<SeriesSolution, HpmError> {
    let c = &config.constants;
    let kin = c.hbar * c.hbar / (2.0 * c.mass);
    let samples: Vec<f64> = profile_samples(&config.profile, PROFILE_SAMPLE_COUNT)
        .into_iter()
        .filter(|&x| config.profile.value(x).abs() > PROFILE_ZERO_GUARD)
        .collect();
    if samples.is_empty() {
        return Err(HpmError::ProfileTooSmall);
    }

    // S_{j-1}/phi_{j-1} = [(hbar^2/2m) f'' - V f - g f^3] / f must be one
    // number across the window; its spread is the closure defect.
    let ratio_at = |x: f64| {
        let f = config.profile.value(x);
        (kin * config.profile.second_derivative(x) - config.potential.value(x) * f
            - c.g * f.powi(3))
            / f
    };
    let reference_x = samples
        .iter()
        .copied()
        .max_by(|a, b| {
            config
                .profile
                .value(*a)
                .abs()
                .total_cmp(&config.profile.value(*b).abs())
        })
        .unwrap();
    let reference = ratio_at(reference_x);
    let spread_abs = samples
        .iter()
        .map(|&x| (ratio_at(x) - reference).abs())
        .fold(0.0f64, f64::max);
    let spread = if reference == 0.0 && spread_abs == 0.0 {
        0.0
    } else {
        spread_abs / reference.abs()
    };
    if !(spread <= PROFILE_CLOSURE_TOL) {
        return Err(HpmError::ClosureViolation {
            step: 1,
            spread,
            tol: PROFILE_CLOSURE_TOL,
        });
    }

    // The high-precision source scalar: same number as `reference`, but
    // carried through the f-consistent algebra where available.
    let f_ref = Dd::from_f64(config.profile.value(reference_x));
    let b = dd_source_basis(&config.profile, &config.potential, c, f_ref)
        .map(|basis| basis.div(f_ref))
        .unwrap_or(Dd::from_f64(reference));

    let prefactor = Complex64::new(0.0, 1.0 / c.hbar);
    let mut dd = Vec::with_capacity(config.order + 1);
    dd.push(CDd::ONE);
    for j in 1..=config.order {
        let step = dd_gamma_step(config.alpha, j)?;
        let next = dd[j - 1].mul_dd(b).mul_complex(prefactor).mul_dd(step);
        dd.push(next);
    }
    let scalars: Vec<Complex64> = dd.iter().map(|z| z.to_complex()).collect();
    if let Some(step) = scalars.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(HpmError::NonFiniteIterate { step });
    }
    Ok(SeriesSolution {
        config,
        iterates: Iterates::Scalars(scalars),
        closure: None,
        dd_scalars: Some(dd),
    })
}

/// One grid-backend step: c_j values from c_{j-1} values.
pub(crate) fn grid_step(
    prev: &[Complex64],
    frozen_density: &[f64],
    potential_values: &[f64],
    grid: &Grid,
    stencil: StencilOrder,
    constants: &PhysicalConstants,
    gamma_step: f64,
) -> Vec<Complex64> {
    let kin = constants.hbar * constants.hbar / (2.0 * constants.mass);
    let prefactor = Complex64::new(0.0, 1.0 / constants.hbar);
    let lap = laplacian(prev, grid, stencil);
    (0..prev.len())
        .map(|i| {
            let source = kin * lap[i]
                - potential_values[i] * prev[i]
                - constants.g * frozen_density[i] * prev[i];
            prefactor * source * gamma_step
        })
        .collect()
}

fn grid_iterate(
    config: ScenarioConfig,
    grid: Grid,
    stencil: StencilOrder,
) -> Result<SeriesSolution, HpmError> {
    let phi0: Vec<Complex64> = grid
        .xs()
        .map(|x| Complex64::new(config.profile.value(x), 0.0))
        .collect();
    let frozen_density: Vec<f64> = phi0.iter().map(|v| v.norm_sqr()).collect();
    let potential_values: Vec<f64> = grid.xs().map(|x| config.potential.value(x)).collect();

    let mut fields = vec![ComplexField::new(grid.clone(), phi0)?];
    for j in 1..=config.order {
        let step = dd_gamma_step(config.alpha, j)?.to_f64();
        let next = grid_step(
            fields[j - 1].values(),
            &frozen_density,
            &potential_values,
            &grid,
            stencil,
            &config.constants,
            step,
        );
        if next.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(HpmError::NonFiniteIterate { step: j });
        }
        fields.push(ComplexField::new(grid.clone(), next)?);
    }
    Ok(SeriesSolution {
        config,
        iterates: Iterates::Fields(fields),
        closure: None,
        dd_scalars: None,
    })
}
