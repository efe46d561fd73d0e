//! Plot-ready data sets for the canonical scenarios.
//!
//! Values come from the resummed closed form f(x) E_alpha(-lambda t^alpha)
//! rather than a truncated series: the detected closure rate makes the
//! evaluation uniformly accurate across the multi-period time windows the
//! plots cover, where any fixed truncation would degrade.

use num_complex::Complex64;

use crate::error::HpmError;
use crate::hpm::closure::CLOSURE_DETECTION_TOL;
use crate::hpm::engine::hpm_iterate;
use crate::hpm::scenario::CanonicalScenario;
use crate::model::profile::Profile;
use crate::special::mittag_leffler::{mittag_leffler, MlArguments};

const ML_TOL: f64 = 1e-12;
const DETECTION_ORDER: usize = 12;

/// A scenario reduced to its profile and detected closure rate; evaluates
/// psi(x, t) anywhere.
#[derive(Debug, Clone)]
pub struct ResummedSolution {
    profile: Profile,
    alpha: f64,
    rate: Complex64,
}

impl ResummedSolution {
    pub fn build(scenario: CanonicalScenario, alpha: f64) -> Result<Self, HpmError> {
        let sol = hpm_iterate(scenario.config(alpha, DETECTION_ORDER)?)?;
        let report = sol.closure().ok_or(HpmError::TooFewIterates(0))?;
        if !report.closed {
            return Err(HpmError::ClosureViolation {
                step: 0,
                spread: report.max_rel_deviation,
                tol: CLOSURE_DETECTION_TOL,
            });
        }
        Ok(ResummedSolution {
            profile: scenario.profile(),
            alpha,
            rate: report.rate,
        })
    }

    pub fn rate(&self) -> Complex64 {
        self.rate
    }

    pub fn value(&self, x: f64, t: f64) -> Result<Complex64, HpmError> {
        let z = -self.rate * t.powf(self.alpha);
        let args = MlArguments::one_parameter(self.alpha, z).map_err(HpmError::Special)?;
        let e = mittag_leffler(args, ML_TOL).map_err(HpmError::Special)?;
        Ok(self.profile.value(x) * e)
    }
}

/// (a) The t = 0 profile.
#[derive(Debug, Clone)]
pub struct ProfileCurve {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
}

/// (b) |psi(x, t)|^2 on an (x, t) rectangle; densities[ti][xi].
#[derive(Debug, Clone)]
pub struct DensitySurface {
    pub xs: Vec<f64>,
    pub ts: Vec<f64>,
    pub densities: Vec<Vec<f64>>,
}

/// (c) Re and Im of psi(x0, t) per alpha; re[ai][ti], im[ai][ti].
#[derive(Debug, Clone)]
pub struct FixedPointTraces {
    pub x0: f64,
    pub ts: Vec<f64>,
    pub alphas: Vec<f64>,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

/// (d) Re psi(x0, t) over the (t, alpha) rectangle; re[ai][ti].
#[derive(Debug, Clone)]
pub struct AlphaSurface {
    pub x0: f64,
    pub ts: Vec<f64>,
    pub alphas: Vec<f64>,
    pub re: Vec<Vec<f64>>,
}

fn x_samples(profile: &Profile, points: usize) -> Vec<f64> {
    let (lo, hi) = profile.sample_interval();
    (0..points)
        .map(|k| lo + (hi - lo) * k as f64 / (points - 1) as f64)
        .collect()
}

fn t_samples(t_max: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|k| t_max * k as f64 / steps as f64).collect()
}

pub fn profile_curve(scenario: CanonicalScenario, points: usize) -> ProfileCurve {
    let profile = scenario.profile();
    let xs = x_samples(&profile, points);
    let values = xs.iter().map(|&x| profile.value(x)).collect();
    ProfileCurve { xs, values }
}

pub fn density_surface(
    scenario: CanonicalScenario,
    alpha: f64,
    points: usize,
    t_max: f64,
    t_steps: usize,
) -> Result<DensitySurface, HpmError> {
    let resummed = ResummedSolution::build(scenario, alpha)?;
    let xs = x_samples(&scenario.profile(), points);
    let ts = t_samples(t_max, t_steps);
    let mut densities = Vec::with_capacity(ts.len());
    for &t in &ts {
        let mut row = Vec::with_capacity(xs.len());
        for &x in &xs {
            row.push(resummed.value(x, t)?.norm_sqr());
        }
        densities.push(row);
    }
    Ok(DensitySurface { xs, ts, densities })
}

pub fn fixed_point_traces(
    scenario: CanonicalScenario,
    alphas: &[f64],
    x0: f64,
    t_max: f64,
    t_steps: usize,
) -> Result<FixedPointTraces, HpmError> {
    let ts = t_samples(t_max, t_steps);
    let mut re = Vec::with_capacity(alphas.len());
    let mut im = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let resummed = ResummedSolution::build(scenario, alpha)?;
        let mut re_row = Vec::with_capacity(ts.len());
        let mut im_row = Vec::with_capacity(ts.len());
        for &t in &ts {
            let v = resummed.value(x0, t)?;
            re_row.push(v.re);
            im_row.push(v.im);
        }
        re.push(re_row);
        im.push(im_row);
    }
    Ok(FixedPointTraces {
        x0,
        ts,
        alphas: alphas.to_vec(),
        re,
        im,
    })
}

/// Alpha sweep 0.2, 0.25, ..., 1.0.
pub fn alpha_surface(
    scenario: CanonicalScenario,
    x0: f64,
    t_max: f64,
    t_steps: usize,
) -> Result<AlphaSurface, HpmError> {
    let alphas: Vec<f64> = (4..=20).map(|k| k as f64 * 0.05).collect();
    let ts = t_samples(t_max, t_steps);
    let mut re = Vec::with_capacity(alphas.len());
    for &alpha in &alphas {
        let resummed = ResummedSolution::build(scenario, alpha)?;
        let mut row = Vec::with_capacity(ts.len());
        for &t in &ts {
            row.push(resummed.value(x0, t)?.re);
        }
        re.push(row);
    }
    Ok(AlphaSurface {
        x0,
        ts,
        alphas,
        re,
    })
}
