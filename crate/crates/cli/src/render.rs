//! Number rendering for human-readable output.

pub use hyberr::shortest_repr;

fn non_finite(v: f64) -> Option<String> {
    if v.is_nan() {
        Some("NaN".into())
    } else if v.is_infinite() {
        Some(if v > 0.0 { "inf" } else { "-inf" }.into())
    } else {
        None
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Six significant digits in plain notation, trailing zeros dropped
/// (`0.0199800...` -> `0.01998`). Magnitudes outside `[1e-9, 1e15)` fall back
/// to scientific notation.
pub fn sig6(v: f64) -> String {
    if let Some(s) = non_finite(v) {
        return s;
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.5e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if !(-9..15).contains(&exp) {
        let (mantissa, _) = sci.split_once('e').expect("exponent");
        return format!("{}e{exp}", trim_zeros(mantissa.to_string()));
    }
    if exp >= 5 {
        let rounded: f64 = sci.parse().expect("round trip");
        return format!("{rounded:.0}");
    }
    let decimals = (5 - exp) as usize;
    trim_zeros(format!("{v:.decimals$}"))
}

/// Six digits after the decimal point, trailing zeros dropped.
pub fn fixed6(v: f64) -> String {
    non_finite(v).unwrap_or_else(|| trim_zeros(format!("{v:.6}")))
}
