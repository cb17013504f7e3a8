use thiserror::Error;

/// Errors produced while building or analysing an oval.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mean support value a0 must be positive, got {a0}")]
    NonPositiveMean { a0: f64 },

    #[error("support function coefficients must be finite")]
    NonFinite,

    #[error("harmonic index must be at least 1, got {n}")]
    InvalidHarmonic { n: u32 },

    #[error("harmonic index {n} appears more than once")]
    DuplicateHarmonic { n: u32 },

    #[error("curve is not an oval: radius of curvature {rho:.6e} at theta = {theta:.12}")]
    NonConvexCurve { theta: f64, rho: f64 },

    #[error("convexity grid of {grid_size} points is too coarse, need at least {required}")]
    GridTooCoarse { grid_size: usize, required: usize },

    #[error("polyline is not closed")]
    OpenPolyline,

    #[error("cusp condition vanishes identically for lambda = {lambda}")]
    DegenerateRoot { lambda: f64 },

    #[error("bound violated at lambda = {lambda}: expected {lower} <= {value} <= {upper}")]
    BoundViolation {
        lambda: f64,
        lower: f64,
        value: f64,
        upper: f64,
    },

    #[error("curve does not have constant width (largest even harmonic amplitude {max_even:.6e})")]
    NotConstantWidth { max_even: f64 },

    #[error("invalid lambda range: {0}")]
    InvalidRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
