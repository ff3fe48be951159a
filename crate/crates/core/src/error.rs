//! Error type shared by all library modules.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} components, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("objective vectors need at least two components, got {got}")]
    TooFewObjectives { got: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("{context} must not be empty")]
    Empty { context: &'static str },

    #[error("invalid rotation plane ({l}, {m}) for dimension {n}")]
    InvalidPlane { l: usize, m: usize, n: usize },

    #[error("angle {radians} rad outside [0, pi/2)")]
    AlphaOutOfRange { radians: f64 },

    #[error("spanning columns do not span a hyperplane (rank deficient)")]
    RankDeficient,

    #[error("vector has components of both signs; cannot scale onto the simplex")]
    MixedSigns,

    #[error("weights sum to {sum}, not 1")]
    NotOnSimplex { sum: f64 },

    #[error("cannot scale the zero vector")]
    ZeroVector,

    #[error("weight vector maps to the zero direction")]
    ZeroWeight,

    #[error("objective {objective} has a degenerate (non-positive) utopia-nadir range")]
    DegenerateRange { objective: usize },

    #[error("utopia exceeds nadir in objective {objective}")]
    BoxInverted { objective: usize },

    #[error("invalid payoff matrix: {reason}")]
    InvalidPayoff { reason: String },

    #[error("scalarization basis [d | V] is singular")]
    SingularBasis,

    #[error("payoff columns are affinely dependent; no unique hyperplane")]
    DegenerateHull,

    #[error("candidate is dominated by point {index}")]
    CandidateDominated { index: usize },

    #[error("trade-off bound must be positive and finite, got {value}")]
    InvalidBound { value: f64 },

    #[error("solver failure: {message}")]
    SolverFailure { message: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
