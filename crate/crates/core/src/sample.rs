//! A nine-point worked example: references at three magnitudes (0.001, 1,
//! 1000), each perturbed by an absolute 0.02, a relative 0.02, and both.
//!
//! The decimal strings are kept so the values can be echoed verbatim and
//! evaluated exactly.

use num_rational::BigRational;

use crate::scalar::exact_decimal;

pub const X: [&str; 9] = [
    "0.021", "0.00102", "0.02102", "1.02", "1.02", "1.04", "1000.2", "1020", "1020.02",
];

pub const Y: [&str; 9] = [
    "0.001", "0.001", "0.001", "1", "1", "1", "1000", "1000", "1000",
];

fn parse<T>(raw: &[&str], f: impl Fn(&str) -> T) -> Vec<T> {
    raw.iter().map(|s| f(s)).collect()
}

/// The example as binary64 values.
pub fn series() -> (Vec<f64>, Vec<f64>) {
    let p = |s: &str| s.parse::<f64>().expect("valid literal");
    (parse(&X, p), parse(&Y, p))
}

/// The example as exact decimals.
pub fn exact_series() -> (Vec<BigRational>, Vec<BigRational>) {
    let p = |s: &str| exact_decimal(s).expect("valid literal");
    (parse(&X, p), parse(&Y, p))
}
