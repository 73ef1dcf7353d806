//! The scalar abstraction every metric is written against.
//!
//! Metrics only need field arithmetic, absolute value and an ordering, so
//! they run unchanged over binary floats and over exact rationals. The
//! rational instantiation is what makes decimal statements such as
//! "`|0.02102 - 0.001| <= 0.02 + 0.02 * 0.001`" checkable without rounding.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// A real-number type usable by the metrics in this crate.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {
    /// `false` for NaN and the infinities. Exact types are always finite.
    fn is_finite_value(&self) -> bool;

    /// The quiet NaN of this type, if it has one.
    fn nan() -> Option<Self>;

    /// Square root, or `None` when the type cannot represent it exactly.
    fn checked_sqrt(&self) -> Option<Self>;

    fn is_nan_value(&self) -> bool {
        #[allow(clippy::eq_op)]
        let reflexive = self == self;
        !reflexive
    }
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            #[inline]
            fn is_finite_value(&self) -> bool {
                self.is_finite()
            }

            #[inline]
            fn nan() -> Option<Self> {
                Some(<$t>::NAN)
            }

            #[inline]
            fn checked_sqrt(&self) -> Option<Self> {
                Some(self.sqrt())
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for BigRational {
    fn is_finite_value(&self) -> bool {
        true
    }

    fn nan() -> Option<Self> {
        None
    }

    fn checked_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let num = exact_isqrt(self.numer())?;
        let den = exact_isqrt(self.denom())?;
        Some(BigRational::new(num, den))
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

/// Larger of two values. A NaN on either side wins, so it propagates
/// through a fold instead of being silently skipped.
pub(crate) fn max_nan<T: Scalar>(acc: T, v: T) -> T {
    match v.partial_cmp(&acc) {
        Some(std::cmp::Ordering::Greater) => v,
        Some(_) => acc,
        None if acc.is_nan_value() => acc,
        None => v,
    }
}

/// Parses decimal text (`-12.5e-3`, `0.021`, `7`) into the exact rational
/// it denotes. Returns `None` on anything else.
pub fn exact_decimal(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (neg, mantissa) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int}{frac}").parse().ok()?;
    let shift = exp - i32::try_from(frac.len()).ok()?;
    let ten = BigInt::from(10u32);
    let mut value = if shift >= 0 {
        BigRational::from_integer(digits * ten.pow(shift.unsigned_abs()))
    } else {
        BigRational::new(digits, ten.pow(shift.unsigned_abs()))
    };
    if neg {
        value = -value;
    }
    Some(value)
}
