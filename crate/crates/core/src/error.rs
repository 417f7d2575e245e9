use thiserror::Error;

/// Errors produced by the tropical-cubic engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,

    #[error("indeterminate arithmetic with infinity: {0}")]
    IndeterminateInfinity(&'static str),

    #[error("coefficient {0} must be finite")]
    NonFiniteCoefficient(&'static str),

    #[error("polynomial has no terms")]
    EmptyPolynomial,

    #[error("support is not two-dimensional")]
    DegenerateSupport,

    #[error("support has {found} points, at most {max} supported")]
    OversizedSupport { found: usize, max: usize },

    #[error("candidate is not a valid tiling: {0}")]
    InvalidTiling(String),

    #[error("polynomial and subdivision are inconsistent: {0}")]
    InconsistentCurve(String),

    #[error("unexpected genus {0}: at most one independent cycle is supported")]
    UnexpectedGenus(usize),

    #[error("linear system has {found} variables, at most {max} supported")]
    TooManyVariables { found: usize, max: usize },

    #[error("malformed linear system: {0}")]
    MalformedSystem(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cone classification {cones} disagrees with subdivision classification {subdivision}")]
    ClassMismatch { cones: String, subdivision: String },

    #[error("classification cones overlap: {0:?}")]
    ConeOverlap(Vec<String>),

    #[error(
        "valuation of {0} is indeterminate at this truncation order; increase truncation order"
    )]
    IndeterminateValuation(&'static str),

    #[error("valuation of {0} is infinite; the coefficient vanishes identically")]
    InfiniteValuation(&'static str),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
