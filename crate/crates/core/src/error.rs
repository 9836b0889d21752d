use thiserror::Error;

/// Errors raised by constructors and checks in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("circle centers coincide (distance {distance:e})")]
    CoincidentCenters { distance: f64 },

    #[error("degenerate triangle: points are collinear")]
    DegenerateTriangle,

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("need at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },

    #[error("vertices {first} and {second} are closer than the minimum gap ({gap:e} < {min_gap:e})")]
    NearDuplicate {
        first: usize,
        second: usize,
        gap: f64,
        min_gap: f64,
    },

    #[error("non-finite angle at position {0}")]
    NonFiniteAngle(usize),

    #[error("invalid tolerance: need 0 < eps_strict < eps_geom < 1e-3 (got eps_strict={eps_strict:e}, eps_geom={eps_geom:e})")]
    InvalidTolerance { eps_geom: f64, eps_strict: f64 },

    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("chords share an endpoint")]
    SharedEndpoint,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("invalid config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
