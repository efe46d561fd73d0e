//! Error types for the library, grouped per subsystem.

use thiserror::Error;

/// Failures from the special-function evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("argument {0} is not finite")]
    NonFiniteArgument(f64),
    #[error("gamma has a pole at the nonpositive integer x = {0}")]
    GammaPole(f64),
    #[error("gamma overflows f64 for x = {0} (threshold ~171.62)")]
    GammaOverflow(f64),
    #[error("Mittag-Leffler parameters must be positive, got alpha = {alpha}, beta = {beta}")]
    MlBadParameters { alpha: f64, beta: f64 },
    #[error("|z| = {0} is outside the series-safe disc |z| <= 25")]
    MlArgumentTooLarge(f64),
    #[error("Mittag-Leffler series failed to reach tol {tol:e} within {cap} terms")]
    MlNoConvergence { tol: f64, cap: usize },
    #[error("series terms peaked near {peak:e}; cancellation leaves fewer digits than tol {tol:e} needs")]
    SeriesConditionLoss { peak: f64, tol: f64 },
    #[error("requested tolerance {0:e} is outside (0, 1e-3]")]
    BadTolerance(f64),
    #[error("asymptotic regime undefined: {0}")]
    AsymptoticDomain(String),
    #[error("power term exponent {0} must exceed -1 for differintegration from 0")]
    ExponentOutOfRange(f64),
    #[error("differintegration of t^{mu} to order {nu} hits a gamma pole (1 + mu - nu = {arg})")]
    DifferintegralPole { mu: f64, nu: f64, arg: f64 },
    #[error("Caputo derivative needs exponent >= 0, got {0}")]
    CaputoExponent(f64),
    #[error("Caputo of t^{mu} with 0 < mu < n-1 = {limit} (non-integer mu) is not integrable")]
    CaputoNotIntegrable { mu: f64, limit: f64 },
    #[error("quadrature order alpha = {0} must lie in (0, 1]")]
    QuadratureAlpha(f64),
    #[error("quadrature horizon t = {0} must be positive and finite")]
    QuadratureHorizon(f64),
    #[error("quadrature failed to converge to rel tol {tol:e} within {panels} panels")]
    QuadratureNoConvergence { tol: f64, panels: usize },
    #[error("confluent series 1F1 hit the pole b = {0} (nonpositive integer)")]
    HypergeometricPole(f64),
    #[error("confluent series 1F1 failed to reach tol {tol:e} within {cap} terms")]
    HypergeometricNoConvergence { tol: f64, cap: usize },
}

/// Failures from grids, profiles, solitons and functionals.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("grid needs at least 8 points, got {0}")]
    TooFewPoints(usize),
    #[error("grid bounds are inverted or degenerate: [{x_min}, {x_max}]")]
    BadBounds { x_min: f64, x_max: f64 },
    #[error("dark soliton requires mu > 0 and g > 0, got mu = {mu}, g = {g}")]
    DarkSolitonDomain { mu: f64, g: f64 },
    #[error("bright soliton requires mu > 0 and g != 0, got mu = {mu}, g = {g}")]
    BrightSolitonDomain { mu: f64, g: f64 },
    #[error("field length {len} does not match grid size {points}")]
    FieldGridMismatch { len: usize, points: usize },
    #[error("field contains non-finite samples")]
    NonFiniteValue,
}

/// Failures from the series engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HpmError {
    #[error("fractional order alpha = {0} must lie in (0, 1]")]
    AlphaOutOfRange(f64),
    #[error("series order must be >= 1, got {0}")]
    OrderTooSmall(usize),
    #[error(
        "source at step {step} is not proportional to the profile \
         (relative spread {spread:e} exceeds {tol:e}); use the grid backend"
    )]
    ClosureViolation { step: usize, spread: f64, tol: f64 },
    #[error("iterate {step} became non-finite")]
    NonFiniteIterate { step: usize },
    #[error("profile nearly vanishes on the whole sampling window; closure check impossible")]
    ProfileTooSmall,
    #[error("requested {requested} terms but the series holds {available}")]
    TermsOutOfRange { requested: usize, available: usize },
    #[error("time t = {0} must be >= 0")]
    NegativeTime(f64),
    #[error("rate detection needs at least 3 iterates, got {0}")]
    TooFewIterates(usize),
    #[error("rate detection hit a vanishing coefficient at step {0}")]
    DegenerateCoefficients(usize),
    #[error("residual diagnostics are defined for alpha = 1 only, got {0}")]
    ResidualNeedsIntegerOrder(f64),
    #[error("profile-backed series sample by coordinate, grid-backed ones by index")]
    SampleKindMismatch,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// Failures from the reference time integrator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntegratorError {
    #[error("dt = {dt:e} violates the stability bound {bound:e} (0.5 h^2 m / hbar)")]
    StabilityBound { dt: f64, bound: f64 },
    #[error("time step and horizon must be positive, got dt = {dt}, t_end = {t_end}")]
    BadTimeRange { dt: f64, t_end: f64 },
    #[error("state became non-finite at t = {t_last}; aborting")]
    NumericBlowup { t_last: f64 },
    #[error("trajectory and series live on different grids")]
    GridMismatch,
    #[error("comparison time t = {t} is outside the stored range [0, {t_max}]")]
    TimeOutOfRange { t: f64, t_max: f64 },
    #[error("trajectory times must increase strictly from 0")]
    NonMonotoneTimes,
    #[error("trajectory holds no samples")]
    EmptyTrajectory,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Series(#[from] HpmError),
}
