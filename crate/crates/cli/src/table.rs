//! The built-in nine-point example, rendered as a table of element-wise
//! errors followed by the Mean, Max and Vector (1-norm) summary rows.

use std::fmt::Write as _;

use hyberr::{sample, MetricConfig, NormKind};

use crate::render::{fixed6, sig6};

const HEADER: [&str; 6] = ["i", "x_i", "y_i", "Absolute error", "Relative error", "Hyb Error"];

fn row(out: &mut String, cells: [&str; 6]) {
    let line = format!(
        "{:<4}{:<10}{:<8}{:<16}{:<16}{}",
        cells[0], cells[1], cells[2], cells[3], cells[4], cells[5]
    );
    let _ = writeln!(out, "{}", line.trim_end());
}

/// Element rows use six significant digits; summary rows six decimals.
pub fn render() -> String {
    let (x, y) = sample::series();
    let cfg = MetricConfig::DEFAULT;
    let rows = cfg
        .elementwise_report(&x, &y)
        .expect("built-in example is valid");
    let set = cfg
        .metric_set(&x, &y, NormKind::One)
        .expect("built-in example is valid");

    let mut out = String::new();
    row(&mut out, HEADER);
    for (i, t) in rows.iter().enumerate() {
        let rel = t.rel.map(sig6).unwrap_or_else(|| "undefined".into());
        row(
            &mut out,
            [&(i + 1).to_string(), sample::X[i], sample::Y[i], &sig6(t.abs), &rel, &sig6(t.hyb)],
        );
    }
    for (label, t) in [("Mean", &set.mean), ("Max", &set.max), ("Vector", &set.vector)] {
        let rel = t.rel.map(fixed6).unwrap_or_else(|| "undefined".into());
        row(&mut out, ["", label, "", &fixed6(t.abs), &rel, &fixed6(t.hyb)]);
    }
    out
}
