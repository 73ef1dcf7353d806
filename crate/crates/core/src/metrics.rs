//! Scalar error metrics and the `isclose` predicate family.
//!
//! For an approximation `x` of a reference `y`:
//!
//! ```text
//! abs_err = |x - y|
//! rel_err = |x - y| / |y|
//! hyb_err = |x - y| / (1 + |y|)
//! ```
//!
//! `hyb_err` is the smallest `eps` for which `isclose(x, y, eps, eps)` holds,
//! i.e. `|x - y| <= eps + eps * |y|`. That identity is exact in real
//! arithmetic; in binary64 the predicate can flip within a few ULPs of the
//! returned value, see [`MetricConfig::boundary_eps`].

use std::cmp::Ordering;

use crate::error::{MetricError, Result, Side};
use crate::scalar::Scalar;

/// An approximation `x` and the reference value `y` it is measured against.
///
/// Metrics are asymmetric: `y` scales the relative part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ScalarPair<T> {
    pub x: T,
    pub y: T,
}

impl<T> ScalarPair<T> {
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }
}

impl<T> From<(T, T)> for ScalarPair<T> {
    fn from((x, y): (T, T)) -> Self {
        Self { x, y }
    }
}

/// Absolute tolerance `a` and relative tolerance `r` for [`MetricConfig::isclose`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    abs: T,
    rel: T,
}

impl<T: Scalar> Tolerance<T> {
    /// Rejects negative and NaN tolerances.
    pub fn new(abs: T, rel: T) -> Result<Self> {
        let zero = T::zero();
        // `!(v >= 0)` also catches NaN.
        if !(abs >= zero) || !(rel >= zero) {
            return Err(MetricError::InvalidTolerance);
        }
        Ok(Self { abs, rel })
    }

    /// The symmetric tolerance `a = r = eps`.
    pub fn symmetric(eps: T) -> Result<Self> {
        Self::new(eps.clone(), eps)
    }

    pub fn abs(&self) -> &T {
        &self.abs
    }

    pub fn rel(&self) -> &T {
        &self.rel
    }
}

/// The constant `t > 0` in the denominator of `|x - y| / (t + |y|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothFactor<T>(T);

impl<T: Scalar> SmoothFactor<T> {
    pub fn new(t: T) -> Result<Self> {
        if !(t > T::zero()) {
            return Err(MetricError::InvalidSmoothFactor);
        }
        Ok(Self(t))
    }

    pub fn get(&self) -> &T {
        &self.0
    }
}

/// How NaN and infinite inputs are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NonFinitePolicy {
    /// Fail with [`MetricError::NonFinite`].
    #[default]
    Reject,
    /// Let IEEE-754 arithmetic run: NaN in gives NaN out, infinities follow
    /// the usual rules.
    Propagate,
}

/// Immutable evaluation settings shared by every metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MetricConfig {
    pub policy: NonFinitePolicy,
    /// When set, [`MetricConfig::k_rel`] errors at `y = 0` instead of
    /// returning 0.
    pub strict_ratios: bool,
}

impl MetricConfig {
    pub const DEFAULT: Self = Self {
        policy: NonFinitePolicy::Reject,
        strict_ratios: false,
    };

    pub const fn with_policy(policy: NonFinitePolicy) -> Self {
        Self {
            policy,
            strict_ratios: false,
        }
    }

    pub const fn strict(mut self, strict: bool) -> Self {
        self.strict_ratios = strict;
        self
    }

    pub(crate) fn admit_value<T: Scalar>(&self, v: &T, side: Side) -> Result<()> {
        match self.policy {
            NonFinitePolicy::Reject if !v.is_finite_value() => Err(MetricError::NonFinite(side)),
            _ => Ok(()),
        }
    }

    fn admit<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<()> {
        self.admit_value(&p.x, Side::Approximation)?;
        self.admit_value(&p.y, Side::Reference)
    }

    /// `|x - y|`.
    pub fn abs_err<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.admit(p)?;
        Ok(distance(p))
    }

    /// `|x - y| / |y|`. Always an error at `y = 0`, except that `0 / 0`
    /// (`x = y = 0`) yields NaN under [`NonFinitePolicy::Propagate`].
    pub fn rel_err<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.admit(p)?;
        if p.y.is_zero() {
            if self.policy == NonFinitePolicy::Propagate && p.x.is_zero() {
                return T::nan().ok_or(MetricError::ZeroReference);
            }
            return Err(MetricError::ZeroReference);
        }
        Ok(distance(p) / p.y.abs())
    }

    /// `|x - y| / (1 + |y|)`, defined for every finite pair.
    pub fn hyb_err<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.admit(p)?;
        Ok(hyb(p))
    }

    /// `hyb_err / abs_err = 1 / (1 + |y|)`. Only `y` is inspected.
    pub fn k_abs<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.admit_value(&p.y, Side::Reference)?;
        Ok(ErrorMetric::Hyb.k_abs(&p.y))
    }

    /// `hyb_err / rel_err`, computed as `|y| / (1 + |y|)` so that it is 0 at
    /// `y = 0` unless `strict_ratios` is set.
    pub fn k_rel<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.admit_value(&p.y, Side::Reference)?;
        if self.strict_ratios && p.y.is_zero() {
            return Err(MetricError::ZeroReference);
        }
        Ok(ErrorMetric::Hyb.k_rel(&p.y))
    }

    /// `|x - y| <= a + r * |y|`.
    pub fn isclose<T: Scalar>(&self, p: &ScalarPair<T>, tol: &Tolerance<T>) -> Result<bool> {
        self.admit(p)?;
        let bound = tol.abs.clone() + tol.rel.clone() * p.y.abs();
        Ok(distance(p) <= bound)
    }

    /// `|x - y| <= max(a, r * |y|)`.
    pub fn isclose_max<T: Scalar>(&self, p: &ScalarPair<T>, tol: &Tolerance<T>) -> Result<bool> {
        self.admit(p)?;
        let scaled = tol.rel.clone() * p.y.abs();
        let bound = match tol.abs.partial_cmp(&scaled) {
            Some(Ordering::Less) => scaled,
            _ => tol.abs.clone(),
        };
        Ok(distance(p) <= bound)
    }

    /// The tightest symmetric tolerance: `min { eps : isclose(p, (eps, eps)) }`.
    ///
    /// Returns `hyb_err(p)`. The characterization is exact in real
    /// arithmetic. With binary64 evaluation of `eps + eps * |y|` the
    /// predicate's own switch point lies within a few ULPs of this value but
    /// is not guaranteed to coincide with it.
    pub fn boundary_eps<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.hyb_err(p)
    }

    /// `|x - y| / (t + |y|)`; equals [`Self::hyb_err`] for `t = 1`, and
    /// `min { eps : isclose(p, (t * eps, eps)) }`.
    pub fn alt1_err<T: Scalar>(&self, p: &ScalarPair<T>, t: &SmoothFactor<T>) -> Result<T> {
        self.admit(p)?;
        Ok(distance(p) / (t.0.clone() + p.y.abs()))
    }

    /// `|x - y| / max(1, |y|)`; equals `min { eps : isclose_max(p, (eps, eps)) }`.
    pub fn alt2_err<T: Scalar>(&self, p: &ScalarPair<T>) -> Result<T> {
        self.admit(p)?;
        Ok(distance(p) / ErrorMetric::<T>::MaxDenominator.denominator(&p.y))
    }
}

#[inline]
fn distance<T: Scalar>(p: &ScalarPair<T>) -> T {
    (p.x.clone() - p.y.clone()).abs()
}

#[inline]
pub(crate) fn hyb<T: Scalar>(p: &ScalarPair<T>) -> T {
    distance(p) / (T::one() + p.y.abs())
}

/// `|x - y|` under the default (rejecting) configuration.
pub fn abs_err<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.abs_err(p)
}

/// `|x - y| / |y|` under the default configuration.
pub fn rel_err<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.rel_err(p)
}

/// `|x - y| / (1 + |y|)` under the default configuration.
pub fn hyb_err<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.hyb_err(p)
}

pub fn k_abs<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.k_abs(p)
}

pub fn k_rel<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.k_rel(p)
}

pub fn isclose<T: Scalar>(p: &ScalarPair<T>, tol: &Tolerance<T>) -> Result<bool> {
    MetricConfig::DEFAULT.isclose(p, tol)
}

pub fn isclose_max<T: Scalar>(p: &ScalarPair<T>, tol: &Tolerance<T>) -> Result<bool> {
    MetricConfig::DEFAULT.isclose_max(p, tol)
}

pub fn boundary_eps<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.boundary_eps(p)
}

pub fn alt1_err<T: Scalar>(p: &ScalarPair<T>, t: &SmoothFactor<T>) -> Result<T> {
    MetricConfig::DEFAULT.alt1_err(p, t)
}

pub fn alt2_err<T: Scalar>(p: &ScalarPair<T>) -> Result<T> {
    MetricConfig::DEFAULT.alt2_err(p)
}

/// The three denominator designs: `1 + |y|`, `t + |y|` and `max(1, |y|)`.
///
/// Each metric is `|x - y| / denominator(y)`, so its ratio to the absolute
/// error is `1 / denominator(y)` and its ratio to the relative error is
/// `|y| / denominator(y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ErrorMetric<T> {
    Hyb,
    Smoothed(SmoothFactor<T>),
    MaxDenominator,
}

impl<T: Scalar> ErrorMetric<T> {
    pub fn denominator(&self, y: &T) -> T {
        let ay = y.abs();
        match self {
            ErrorMetric::Hyb => T::one() + ay,
            ErrorMetric::Smoothed(t) => t.0.clone() + ay,
            ErrorMetric::MaxDenominator => match ay.partial_cmp(&T::one()) {
                Some(Ordering::Greater) => ay,
                _ => T::one(),
            },
        }
    }

    /// Evaluates the metric on `p` under `cfg`.
    pub fn err(&self, cfg: &MetricConfig, p: &ScalarPair<T>) -> Result<T> {
        match self {
            ErrorMetric::Hyb => cfg.hyb_err(p),
            ErrorMetric::Smoothed(t) => cfg.alt1_err(p, t),
            ErrorMetric::MaxDenominator => cfg.alt2_err(p),
        }
    }

    /// Ratio of this metric to the absolute error.
    pub fn k_abs(&self, y: &T) -> T {
        T::one() / self.denominator(y)
    }

    /// Ratio of this metric to the relative error.
    pub fn k_rel(&self, y: &T) -> T {
        y.abs() / self.denominator(y)
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;

    fn p(x: f64, y: f64) -> ScalarPair<f64> {
        ScalarPair::new(x, y)
    }

    fn ulp(v: f64) -> f64 {
        let a = v.abs();
        f64::from_bits(a.to_bits() + 1) - a
    }

    fn within_ulps(a: f64, b: f64, n: f64) -> bool {
        (a - b).abs() <= n * ulp(b)
    }

    fn dec(s: &str) -> BigRational {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let digits: num_bigint::BigInt = format!("{int}{frac}").parse().unwrap();
        BigRational::new(digits, num_bigint::BigInt::from(10u32).pow(frac.len() as u32))
    }

    #[test]
    fn abs_err_examples() {
        assert_eq!(abs_err(&p(1020.0, 1000.0)).unwrap(), 20.0);
        assert_eq!(abs_err(&p(3.5, 3.5)).unwrap(), 0.0);
        assert!((abs_err(&p(0.021, 0.001)).unwrap() - 0.02).abs() < 1e-17);
    }

    #[test]
    fn rel_err_examples() {
        assert!((rel_err(&p(1020.0, 1000.0)).unwrap() - 0.02).abs() < 1e-15);
        assert!((rel_err(&p(0.021, 0.001)).unwrap() - 20.0).abs() < 1e-12);
        assert_eq!(rel_err(&p(4.0, 0.0)), Err(MetricError::ZeroReference));
        assert_eq!(rel_err(&p(0.0, 0.0)), Err(MetricError::ZeroReference));
    }

    #[test]
    fn rel_err_zero_reference_under_propagate() {
        let cfg = MetricConfig::with_policy(NonFinitePolicy::Propagate);
        assert!(cfg.rel_err(&p(0.0, 0.0)).unwrap().is_nan());
        assert_eq!(cfg.rel_err(&p(1.0, 0.0)), Err(MetricError::ZeroReference));
        assert_eq!(cfg.rel_err(&p(f64::NAN, 0.0)), Err(MetricError::ZeroReference));
    }

    #[test]
    fn hyb_err_examples() {
        let h = hyb_err(&p(0.021, 0.001)).unwrap();
        assert_eq!(h, 0.02 / 1.001);
        assert!((h - 0.01998).abs() < 5e-7);
        assert!((hyb_err(&p(1020.02, 1000.0)).unwrap() - 0.02).abs() < 1e-15);
        assert!((hyb_err(&p(1.04, 1.0)).unwrap() - 0.02).abs() < 1e-16);
        assert_eq!(hyb_err(&p(-7.25, 0.0)).unwrap(), 7.25);
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(k_abs(&p(3.0, 0.0)).unwrap(), 1.0);
        assert_eq!(k_abs(&p(3.0, 1.0)).unwrap(), 0.5);
        assert_eq!(k_rel(&p(3.0, 1.0)).unwrap(), 0.5);
        assert_eq!(k_abs(&p(3.0, 1000.0)).unwrap(), 1.0 / 1001.0);
        assert_eq!(k_rel(&p(3.0, 1000.0)).unwrap(), 1000.0 / 1001.0);
        assert_eq!(k_abs(&p(3.0, -1000.0)).unwrap(), 1.0 / 1001.0);
    }

    #[test]
    fn k_rel_at_zero() {
        assert_eq!(k_rel(&p(1.0, 0.0)).unwrap(), 0.0);
        let strict = MetricConfig::DEFAULT.strict(true);
        assert_eq!(strict.k_rel(&p(1.0, 0.0)), Err(MetricError::ZeroReference));
        assert_eq!(strict.k_rel(&p(1.0, 2.0)).unwrap(), 2.0 / 3.0);
    }

    #[test]
    fn k_abs_ignores_x() {
        assert_eq!(k_abs(&p(f64::NAN, 1.0)).unwrap(), 0.5);
        assert!(k_abs(&p(0.0, f64::NAN)).is_err());
    }

    // These are statements about decimal numbers, so they are checked in
    // exact arithmetic.
    #[test]
    fn isclose_examples() {
        let q = |x: &str, y: &str| ScalarPair::new(dec(x), dec(y));
        let t = |a: &str, r: &str| Tolerance::new(dec(a), dec(r)).unwrap();
        assert!(isclose(&q("1.02", "1"), &t("0.02", "0")).unwrap());
        assert!(!isclose(&q("1.02", "1"), &t("0.0199", "0")).unwrap());
        assert!(isclose(&q("0.02102", "0.001"), &t("0.02", "0.02")).unwrap());
        assert!(isclose_max(&q("1.02", "1"), &t("0.02", "0.02")).unwrap());
        assert!(!isclose_max(&q("0.02102", "0.001"), &t("0.02", "0.02")).unwrap());
        assert!(isclose_max(&q("5.5", "5.5"), &t("0", "0")).unwrap());
        assert!(isclose(&q("5.5", "5.5"), &t("0", "0")).unwrap());
    }

    #[test]
    fn isclose_binary64() {
        let t = |a, r| Tolerance::new(a, r).unwrap();
        // 1.02 is stored as 1.0200000000000000177..., a hair above 0.02 away.
        assert!(!isclose(&p(1.02, 1.0), &t(0.02, 0.0)).unwrap());
        assert!(isclose(&p(1.02, 1.0), &t(0.020000000000000018, 0.0)).unwrap());
        assert!(!isclose(&p(1.02, 1.0), &t(0.0199, 0.0)).unwrap());
        assert!(isclose(&p(0.02102, 0.001), &t(0.02, 0.02)).unwrap());
        assert!(!isclose_max(&p(0.02102, 0.001), &t(0.02, 0.02)).unwrap());
        assert!(isclose_max(&p(5.5, 5.5), &t(0.0, 0.0)).unwrap());
    }

    // Exact decimal oracle for the borderline isclose examples, written
    // without going through the generic metric code.
    #[test]
    fn isclose_borderline_exact_decimal() {
        let d = dec("0.02102") - dec("0.001");
        let bound_sum = dec("0.02") + dec("0.02") * dec("0.001");
        assert_eq!(d, bound_sum);
        assert!(d > dec("0.02"));

        let cfg = MetricConfig::DEFAULT;
        let pair = ScalarPair::new(dec("0.02102"), dec("0.001"));
        let tol = Tolerance::symmetric(dec("0.02")).unwrap();
        assert!(cfg.isclose(&pair, &tol).unwrap());
        assert!(!cfg.isclose_max(&pair, &tol).unwrap());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_eps(&p(0.021, 0.001)).unwrap(), 0.02 / 1.001);
        assert_eq!(boundary_eps(&p(-2.0, -2.0)).unwrap(), 0.0);
    }

    #[test]
    fn alt_examples() {
        let one = SmoothFactor::new(1.0).unwrap();
        let five = SmoothFactor::new(5.0).unwrap();
        let pr = p(0.021, 0.001);
        assert_eq!(alt1_err(&pr, &one).unwrap(), hyb_err(&pr).unwrap());
        let v = alt1_err(&pr, &five).unwrap();
        assert!((v - 0.02 / 5.001).abs() < 1e-17);
        assert!((v - 0.0039992).abs() < 1e-7);
        assert_eq!(alt1_err(&p(-3.0, 0.0), &five).unwrap(), 3.0 / 5.0);

        assert_eq!(alt2_err(&pr).unwrap(), abs_err(&pr).unwrap());
        let big = p(1020.0, 1000.0);
        assert_eq!(alt2_err(&big).unwrap(), rel_err(&big).unwrap());
        assert_eq!(alt2_err(&p(-4.5, 0.0)).unwrap(), 4.5);
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(Tolerance::new(-1e-9, 0.0), Err(MetricError::InvalidTolerance));
        assert_eq!(Tolerance::new(0.0, -1.0), Err(MetricError::InvalidTolerance));
        assert_eq!(Tolerance::new(f64::NAN, 0.0), Err(MetricError::InvalidTolerance));
        assert!(Tolerance::new(0.0, 0.0).is_ok());
        assert_eq!(SmoothFactor::new(0.0), Err(MetricError::InvalidSmoothFactor));
        assert_eq!(SmoothFactor::new(-2.0), Err(MetricError::InvalidSmoothFactor));
        assert_eq!(SmoothFactor::new(f64::NAN), Err(MetricError::InvalidSmoothFactor));
    }

    #[test]
    fn non_finite_policy() {
        let nan = p(f64::NAN, 1.0);
        let inf_y = p(1.0, f64::INFINITY);
        assert_eq!(hyb_err(&nan), Err(MetricError::NonFinite(Side::Approximation)));
        assert_eq!(abs_err(&inf_y), Err(MetricError::NonFinite(Side::Reference)));
        let tol = Tolerance::symmetric(1.0).unwrap();
        assert!(isclose(&nan, &tol).is_err());

        let cfg = MetricConfig::with_policy(NonFinitePolicy::Propagate);
        assert!(cfg.hyb_err(&nan).unwrap().is_nan());
        assert!(cfg.abs_err(&nan).unwrap().is_nan());
        // |1 - inf| / (1 + inf) = inf / inf
        assert!(cfg.hyb_err(&inf_y).unwrap().is_nan());
        assert_eq!(cfg.hyb_err(&p(f64::INFINITY, 1.0)).unwrap(), f64::INFINITY);
        assert_eq!(cfg.k_abs(&inf_y).unwrap(), 0.0);
        assert!(!cfg.isclose(&nan, &tol).unwrap());
    }

    #[test]
    fn exact_rational_instantiation() {
        let pair = ScalarPair::new(dec("0.021"), dec("0.001"));
        let h = hyb_err(&pair).unwrap();
        assert_eq!(h, BigRational::new(20.into(), 1001.into()));
        assert_eq!(rel_err(&pair).unwrap(), dec("20"));
        let ka = k_abs(&pair).unwrap();
        let kr = k_rel(&pair).unwrap();
        assert_eq!(ka + kr, dec("1"));
    }

    #[test]
    fn alt1_not_absolute_near_zero() {
        let five = SmoothFactor::new(5.0).unwrap();
        let pr = p(1e-12 + 0.5, 1e-12);
        let ratio = alt1_err(&pr, &five).unwrap() / abs_err(&pr).unwrap();
        assert!((ratio - 0.2).abs() < 1e-9);
    }

    #[test]
    fn alt2_kink_at_one() {
        let m = ErrorMetric::<f64>::MaxDenominator;
        let h = 1e-6;
        let left = (m.k_abs(&1.0) - m.k_abs(&(1.0 - h))) / h;
        let right = (m.k_abs(&(1.0 + h)) - m.k_abs(&1.0)) / h;
        assert!((left - right).abs() > 0.5, "left {left} right {right}");
        let smooth = ErrorMetric::<f64>::Hyb;
        let left = (smooth.k_abs(&1.0) - smooth.k_abs(&(1.0 - h))) / h;
        let right = (smooth.k_abs(&(1.0 + h)) - smooth.k_abs(&1.0)) / h;
        assert!((left - right).abs() < 1e-4);
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            -1e6..1e6f64,
            (-12.0..12.0f64, any::<bool>()).prop_map(|(e, neg)| {
                let v = 10f64.powf(e);
                if neg { -v } else { v }
            }),
            Just(0.0),
        ]
    }

    proptest! {
        #[test]
        fn identity_and_nonnegativity(x in finite(), y in finite()) {
            let pr = p(x, y);
            let h = hyb_err(&pr).unwrap();
            prop_assert!(h >= 0.0);
            prop_assert!(abs_err(&pr).unwrap() >= 0.0);
            prop_assert_eq!(h == 0.0, x == y);
        }

        #[test]
        fn zero_reference_is_abs(x in finite()) {
            prop_assert_eq!(hyb_err(&p(x, 0.0)).unwrap().to_bits(), x.abs().to_bits());
        }

        #[test]
        fn factorizations(x in finite(), y in finite()) {
            let pr = p(x, y);
            let h = hyb_err(&pr).unwrap();
            let a = abs_err(&pr).unwrap();
            prop_assert!(within_ulps(a * k_abs(&pr).unwrap(), h, 2.0));
            if y != 0.0 {
                prop_assert!(within_ulps(rel_err(&pr).unwrap() * k_rel(&pr).unwrap(), h, 2.0));
            }
        }

        #[test]
        fn domination(x in finite(), y in finite()) {
            let pr = p(x, y);
            let h = hyb_err(&pr).unwrap();
            prop_assert!(h <= abs_err(&pr).unwrap());
            if y != 0.0 && x != y {
                prop_assert!(h < rel_err(&pr).unwrap());
            }
        }

        #[test]
        fn ratio_monotonicity(mut ys in prop::collection::vec(1e-9..1e9f64, 2..40)) {
            ys.sort_by(f64::total_cmp);
            ys.dedup();
            for w in ys.windows(2) {
                let (lo, hi) = (p(0.0, w[0]), p(0.0, w[1]));
                // Adjacent grid points can round to the same ratio.
                prop_assert!(k_abs(&lo).unwrap() >= k_abs(&hi).unwrap());
                prop_assert!(k_rel(&lo).unwrap() <= k_rel(&hi).unwrap());
            }
            let (first, last) = (p(0.0, ys[0]), p(0.0, *ys.last().unwrap()));
            if ys[0] * 2.0 < *ys.last().unwrap() {
                prop_assert!(k_abs(&first).unwrap() > k_abs(&last).unwrap());
                prop_assert!(k_rel(&first).unwrap() < k_rel(&last).unwrap());
            }
        }

        #[test]
        fn isclose_monotone(x in finite(), y in finite(),
                            a in 0.0..10.0f64, r in 0.0..10.0f64,
                            da in 0.0..10.0f64, dr in 0.0..10.0f64) {
            let pr = p(x, y);
            if isclose(&pr, &Tolerance::new(a, r).unwrap()).unwrap() {
                prop_assert!(isclose(&pr, &Tolerance::new(a + da, r + dr).unwrap()).unwrap());
            }
            if isclose_max(&pr, &Tolerance::new(a, r).unwrap()).unwrap() {
                prop_assert!(isclose_max(&pr, &Tolerance::new(a + da, r + dr).unwrap()).unwrap());
            }
        }

        #[test]
        fn limit_surrogates(y in 1e-12..1e-7f64, d in 1e-6..10.0f64) {
            let small = p(y + d, y);
            prop_assert!(hyb_err(&small).unwrap() / abs_err(&small).unwrap() >= 1.0 - 1e-6);
            let big_y = 1.0 / y;
            let large = p(big_y + d * big_y, big_y);
            prop_assert!(hyb_err(&large).unwrap() / rel_err(&large).unwrap() >= 1.0 - 1e-6);
        }
    }
}
