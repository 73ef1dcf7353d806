use std::fmt;

use thiserror::Error;

/// Which member of a compared pair a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The approximation `x`.
    Approximation,
    /// The reference `y`.
    Reference,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Approximation => "approximation",
            Side::Reference => "reference",
        })
    }
}

/// Errors raised by the scalar and aggregate metrics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("non-finite {0} value")]
    NonFinite(Side),
    #[error("relative error is undefined for a zero reference")]
    ZeroReference,
    #[error("tolerances must be non-negative and not NaN")]
    InvalidTolerance,
    #[error("smooth factor must be strictly positive")]
    InvalidSmoothFactor,
    #[error("length mismatch: approximation has {x} values, reference has {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("empty series")]
    EmptySeries,
    #[error("the 2-norm has no exact value in this scalar type")]
    InexactNorm,
}

pub type Result<T, E = MetricError> = std::result::Result<T, E>;
