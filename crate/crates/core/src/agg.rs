//! Aggregate metrics over paired sequences: element-wise reports, means,
//! element-wise maxima and norm-based vector errors.
//!
//! All folds run left to right in input order with plain summation, so a
//! given input always produces the same bits.

use std::fmt;
use std::str::FromStr;

use crate::error::{MetricError, Result, Side};
use crate::metrics::{ErrorMetric, MetricConfig, ScalarPair, Tolerance};
use crate::scalar::{max_nan, Scalar};

/// An ordered sequence of values with a label naming where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSeries<T> {
    values: Vec<T>,
    label: String,
}

impl<T> NumericSeries<T> {
    pub fn new(values: Vec<T>, label: impl Into<String>) -> Self {
        Self {
            values,
            label: label.into(),
        }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

/// Vector norm used by [`MetricConfig::vector_errs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormKind {
    One,
    Two,
    Infinity,
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormKind::One => "1",
            NormKind::Two => "2",
            NormKind::Infinity => "inf",
        })
    }
}

impl FromStr for NormKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "1" | "one" | "l1" => Ok(NormKind::One),
            "2" | "two" | "l2" => Ok(NormKind::Two),
            "inf" | "infinity" | "max" => Ok(NormKind::Infinity),
            other => Err(format!("unknown norm `{other}` (expected 1, 2 or inf)")),
        }
    }
}

/// Absolute, relative and Hyb error of one element or one aggregate.
///
/// `rel` is `None` where the relative error is undefined (a zero reference).
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTriple<T> {
    pub abs: T,
    pub rel: Option<T>,
    pub hyb: T,
}

impl<T> ErrorTriple<T> {
    /// The relative error, or [`MetricError::ZeroReference`] if undefined.
    pub fn rel(&self) -> Result<&T> {
        self.rel.as_ref().ok_or(MetricError::ZeroReference)
    }
}

/// The nine summary measurements of a sequence pair.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricSet<T> {
    pub n: usize,
    pub norm: NormKind,
    /// MAE, MRE, MHE.
    pub mean: ErrorTriple<T>,
    /// MEAE, MERE, MEHE.
    pub max: ErrorTriple<T>,
    /// `‖x−y‖`, `‖x−y‖/‖y‖`, `‖x−y‖/(1+‖y‖)`.
    pub vector: ErrorTriple<T>,
}

impl<T: Clone> MetricSet<T> {
    /// MEHE, the tightest symmetric `isclose` tolerance for the whole pair.
    pub fn mehe(&self) -> T {
        self.max.hyb.clone()
    }
}

/// Which predicate a tolerance check evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CheckMode {
    /// `isclose(x, y, eps, eps)`, bounded by the Hyb error.
    #[default]
    Hyb,
    /// `isclose_max(x, y, eps, eps)`, bounded by `|x - y| / max(1, |y|)`.
    Max,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Hyb => "hyb",
            CheckMode::Max => "max",
        })
    }
}

impl FromStr for CheckMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "hyb" => Ok(CheckMode::Hyb),
            "max" | "max-variant" => Ok(CheckMode::Max),
            other => Err(format!("unknown mode `{other}` (expected hyb or max)")),
        }
    }
}

/// Result of [`MetricConfig::check`].
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome<T> {
    pub pass: bool,
    pub first_failure: Option<usize>,
    /// Smallest tolerance that passes every element.
    pub boundary: T,
}

fn ensure_paired<T>(x: &[T], y: &[T]) -> Result<()> {
    if x.len() != y.len() {
        return Err(MetricError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    if x.is_empty() {
        return Err(MetricError::EmptySeries);
    }
    Ok(())
}

/// `‖v‖` under `kind`. The 2-norm divides by the largest magnitude before
/// squaring so that large components cannot overflow.
pub fn norm<T: Scalar>(v: &[T], kind: NormKind) -> Result<T> {
    match kind {
        NormKind::One => Ok(v.iter().fold(T::zero(), |acc, c| acc + c.abs())),
        NormKind::Infinity => Ok(max_abs(v)),
        NormKind::Two => {
            let scale = max_abs(v);
            if scale.is_zero() || !scale.is_finite_value() {
                return Ok(scale);
            }
            let sum = v.iter().fold(T::zero(), |acc, c| {
                let s = c.clone() / scale.clone();
                acc + s.clone() * s
            });
            let root = sum.checked_sqrt().ok_or(MetricError::InexactNorm)?;
            Ok(scale * root)
        }
    }
}

fn max_abs<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, c| max_nan(acc, c.abs()))
}

impl MetricConfig {
    fn admit_all<T: Scalar>(&self, x: &[T], y: &[T]) -> Result<()> {
        ensure_paired(x, y)?;
        for (xi, yi) in x.iter().zip(y) {
            self.admit_value(xi, Side::Approximation)?;
            self.admit_value(yi, Side::Reference)?;
        }
        Ok(())
    }

    fn pairs<'a, T: Scalar>(x: &'a [T], y: &'a [T]) -> impl Iterator<Item = ScalarPair<T>> + 'a {
        x.iter()
            .zip(y)
            .map(|(a, b)| ScalarPair::new(a.clone(), b.clone()))
    }

    /// Per-index (abs, rel, hyb). `rel` is `None` where `y_i = 0`.
    pub fn elementwise_report<T: Scalar>(&self, x: &[T], y: &[T]) -> Result<Vec<ErrorTriple<T>>> {
        self.admit_all(x, y)?;
        Self::pairs(x, y)
            .map(|p| {
                Ok(ErrorTriple {
                    abs: self.abs_err(&p)?,
                    rel: match self.rel_err(&p) {
                        Ok(r) => Some(r),
                        Err(MetricError::ZeroReference) => None,
                        Err(e) => return Err(e),
                    },
                    hyb: self.hyb_err(&p)?,
                })
            })
            .collect()
    }

    /// MAE, MRE and MHE, each normalized by `n`.
    ///
    /// MRE is undefined (`rel = None`) if any reference is zero.
    pub fn mean_errs<T: Scalar>(&self, x: &[T], y: &[T]) -> Result<ErrorTriple<T>> {
        self.admit_all(x, y)?;
        let mut abs = T::zero();
        let mut rel = Some(T::zero());
        let mut hyb = T::zero();
        for p in Self::pairs(x, y) {
            let d = self.abs_err(&p)?;
            if p.y.is_zero() {
                rel = None;
            }
            if let Some(acc) = rel.take() {
                rel = Some(acc + d.clone() / p.y.abs());
            }
            abs = abs + d;
            hyb = hyb + self.hyb_err(&p)?;
        }
        let n = T::from_usize(x.len()).expect("series length representable in scalar type");
        Ok(ErrorTriple {
            abs: abs / n.clone(),
            rel: rel.map(|r| r / n.clone()),
            hyb: hyb / n,
        })
    }

    /// MEAE, MERE and MEHE. MERE is undefined if any reference is zero.
    pub fn max_errs<T: Scalar>(&self, x: &[T], y: &[T]) -> Result<ErrorTriple<T>> {
        let rows = self.elementwise_report(x, y)?;
        let mut it = rows.into_iter();
        let first = it.next().ok_or(MetricError::EmptySeries)?;
        Ok(it.fold(first, |acc, row| ErrorTriple {
            abs: max_nan(acc.abs, row.abs),
            rel: match (acc.rel, row.rel) {
                (Some(a), Some(b)) => Some(max_nan(a, b)),
                _ => None,
            },
            hyb: max_nan(acc.hyb, row.hyb),
        }))
    }

    /// MEHE: the smallest `eps` with `isclose(x_i, y_i, eps, eps)` for all `i`.
    pub fn mehe_boundary<T: Scalar>(&self, x: &[T], y: &[T]) -> Result<T> {
        self.admit_all(x, y)?;
        let mut it = Self::pairs(x, y).map(|p| crate::metrics::hyb(&p));
        let first = it.next().ok_or(MetricError::EmptySeries)?;
        Ok(it.fold(first, max_nan))
    }

    /// `‖x−y‖`, `‖x−y‖/‖y‖` and `‖x−y‖/(1+‖y‖)`; the relative part is
    /// undefined when `‖y‖ = 0`.
    pub fn vector_errs<T: Scalar>(&self, x: &[T], y: &[T], kind: NormKind) -> Result<ErrorTriple<T>> {
        self.admit_all(x, y)?;
        let diff: Vec<T> = x
            .iter()
            .zip(y)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        let nd = norm(&diff, kind)?;
        let ny = norm(y, kind)?;
        let rel = (!ny.is_zero()).then(|| nd.clone() / ny.clone());
        let hyb = nd.clone() / (T::one() + ny);
        Ok(ErrorTriple { abs: nd, rel, hyb })
    }

    /// All nine summary metrics at once.
    pub fn metric_set<T: Scalar>(&self, x: &[T], y: &[T], kind: NormKind) -> Result<MetricSet<T>> {
        Ok(MetricSet {
            n: x.len(),
            norm: kind,
            mean: self.mean_errs(x, y)?,
            max: self.max_errs(x, y)?,
            vector: self.vector_errs(x, y, kind)?,
        })
    }

    /// `true` iff `isclose(x_i, y_i, a, r)` holds for every element, with
    /// the predicate evaluated literally as `|x - y| <= a + r|y|`.
    pub fn isclose_all<T: Scalar>(&self, x: &[T], y: &[T], tol: &Tolerance<T>) -> Result<bool> {
        self.admit_all(x, y)?;
        for p in Self::pairs(x, y) {
            if !self.isclose(&p, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Checks every element against the symmetric tolerance `(eps, eps)`.
    ///
    /// An element passes when its boundary (Hyb error, or the max-variant
    /// error) is at most `eps`. This is the same set as `isclose(x, y, eps,
    /// eps)` in real arithmetic, and it makes the reported boundary itself a
    /// passing tolerance in floating point.
    pub fn check<T: Scalar>(&self, x: &[T], y: &[T], eps: &T, mode: CheckMode) -> Result<CheckOutcome<T>> {
        Tolerance::symmetric(eps.clone())?;
        self.admit_all(x, y)?;
        let metric = match mode {
            CheckMode::Hyb => ErrorMetric::Hyb,
            CheckMode::Max => ErrorMetric::MaxDenominator,
        };
        let mut first_failure = None;
        let mut boundary: Option<T> = None;
        for (i, p) in Self::pairs(x, y).enumerate() {
            let e = metric.err(self, &p)?;
            // NaN never passes.
            if first_failure.is_none() && !(e <= *eps) {
                first_failure = Some(i);
            }
            boundary = Some(match boundary {
                None => e,
                Some(b) => max_nan(b, e),
            });
        }
        Ok(CheckOutcome {
            pass: first_failure.is_none(),
            first_failure,
            boundary: boundary.ok_or(MetricError::EmptySeries)?,
        })
    }
}

pub fn elementwise_report<T: Scalar>(x: &[T], y: &[T]) -> Result<Vec<ErrorTriple<T>>> {
    MetricConfig::DEFAULT.elementwise_report(x, y)
}

pub fn mean_errs<T: Scalar>(x: &[T], y: &[T]) -> Result<ErrorTriple<T>> {
    MetricConfig::DEFAULT.mean_errs(x, y)
}

pub fn max_errs<T: Scalar>(x: &[T], y: &[T]) -> Result<ErrorTriple<T>> {
    MetricConfig::DEFAULT.max_errs(x, y)
}

pub fn mehe_boundary<T: Scalar>(x: &[T], y: &[T]) -> Result<T> {
    MetricConfig::DEFAULT.mehe_boundary(x, y)
}

pub fn vector_errs<T: Scalar>(x: &[T], y: &[T], kind: NormKind) -> Result<ErrorTriple<T>> {
    MetricConfig::DEFAULT.vector_errs(x, y, kind)
}

pub fn metric_set<T: Scalar>(x: &[T], y: &[T], kind: NormKind) -> Result<MetricSet<T>> {
    MetricConfig::DEFAULT.metric_set(x, y, kind)
}
