//! Error metrics built around the Hyb Error `|x - y| / (1 + |y|)`.
//!
//! The Hyb Error behaves like the absolute error for small references and
//! like the relative error for large ones, and it is exactly the smallest
//! symmetric tolerance `eps` for which `isclose(x, y, eps, eps)` holds
//! (`|x - y| <= eps + eps * |y|`). Over a sequence, the maximum element-wise
//! Hyb Error (MEHE) is therefore the tightest tolerance a regression check
//! could use and still pass.
//!
//! Every metric is generic over [`Scalar`], implemented for `f32`, `f64`
//! and exact [`BigRational`]s. The aliases below name the common
//! instantiations.
//!
//! ```
//! use hyberr::{hyb_err, isclose, Pair, Tolerance};
//!
//! let p = Pair::new(1020.02, 1000.0);
//! let eps = hyb_err(&p).unwrap();
//! assert!((eps - 0.02).abs() < 1e-15);
//! assert!(isclose(&p, &Tolerance::symmetric(0.0201).unwrap()).unwrap());
//! ```

pub mod agg;
pub mod error;
pub mod io;
pub mod metrics;
pub mod sample;
pub mod scalar;

pub use agg::{
    elementwise_report, max_errs, mean_errs, mehe_boundary, metric_set, norm, vector_errs,
    CheckMode, CheckOutcome, ErrorTriple, MetricSet, NormKind, NumericSeries,
};
pub use error::{MetricError, Side};
pub use io::{
    load_series, pair_inputs, shortest_repr, write_series, DataError, Location, PairedInput,
    SeriesFormat, SeriesSource,
};
pub use metrics::{
    abs_err, alt1_err, alt2_err, boundary_eps, hyb_err, isclose, isclose_max, k_abs, k_rel,
    rel_err, ErrorMetric, MetricConfig, NonFinitePolicy, ScalarPair, SmoothFactor, Tolerance,
};
pub use num_rational::BigRational;
pub use scalar::{exact_decimal, Scalar};

/// A binary64 approximation/reference pair.
pub type Pair = ScalarPair<f64>;
/// A pair of exact rationals.
pub type ExactPair = ScalarPair<BigRational>;
/// A binary64 series, as loaded from disk.
pub type Series = NumericSeries<f64>;
pub type Triple = ErrorTriple<f64>;
pub type Metrics = MetricSet<f64>;
