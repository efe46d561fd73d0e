//! Series solutions of the evolution equation: the iteration engine, the
//! geometric-ladder (Mittag-Leffler) closure detector, and a-posteriori
//! residual checks.

pub mod closure;
pub mod engine;
pub mod residual;
pub mod scenario;

pub use closure::{
    cubic_convolution, cubic_convolution_fields, detect_ml_closure, ClosureReport,
    CLOSURE_DETECTION_TOL,
};
pub use engine::{
    evaluate_series, hpm_iterate, Iterates, SamplePoint, SeriesEvaluation, SeriesSolution,
};
pub use residual::{coefficient_recursion_check, residual_integer};
pub use scenario::{CanonicalScenario, ScenarioConfig, SpatialBackend};
