//! The comparison report and its JSON schema.
//!
//! ```text
//! {"n", "mean": {"abs","rel","hyb"}, "max": {...},
//!  "vector": {"norm","abs","rel","hyb"}, "boundary",
//!  "verdict": {"eps","mode","pass"} | null,
//!  "per_element": [{"index","x","y","abs","rel","hyb"}] | null}
//! ```
//!
//! `rel` is null where the relative error is undefined. Numbers are written
//! in shortest round-trip form; JSON cannot carry NaN, so a NaN produced
//! under the propagate policy is written as null as well.

use std::fmt::Write as _;

use hyberr::{CheckMode, ErrorTriple, MetricConfig, MetricError, NormKind};
use serde::{Deserialize, Deserializer, Serialize};

use crate::render::{shortest_repr, sig6};

fn nan_if_null<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(deserialize_with = "nan_if_null")]
    pub abs: f64,
    pub rel: Option<f64>,
    #[serde(deserialize_with = "nan_if_null")]
    pub hyb: f64,
}

impl From<&ErrorTriple<f64>> for Summary {
    fn from(t: &ErrorTriple<f64>) -> Self {
        Self {
            abs: t.abs,
            rel: t.rel,
            hyb: t.hyb,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorSummary {
    pub norm: String,
    #[serde(deserialize_with = "nan_if_null")]
    pub abs: f64,
    pub rel: Option<f64>,
    #[serde(deserialize_with = "nan_if_null")]
    pub hyb: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub eps: f64,
    pub mode: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementRow {
    pub index: usize,
    #[serde(deserialize_with = "nan_if_null")]
    pub x: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub y: f64,
    #[serde(deserialize_with = "nan_if_null")]
    pub abs: f64,
    pub rel: Option<f64>,
    #[serde(deserialize_with = "nan_if_null")]
    pub hyb: f64,
}

/// Result of comparing an approximation series against a reference.
///
/// `boundary` is always the MEHE; `verdict` is present only when a
/// tolerance was supplied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub n: usize,
    pub mean: Summary,
    pub max: Summary,
    pub vector: VectorSummary,
    #[serde(deserialize_with = "nan_if_null")]
    pub boundary: f64,
    pub verdict: Option<Verdict>,
    pub per_element: Option<Vec<ElementRow>>,
}

/// Options for [`ComparisonReport::build`].
#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub norm: NormKind,
    pub per_element: bool,
    pub tolerance: Option<(f64, CheckMode)>,
}

impl ComparisonReport {
    pub fn build(cfg: &MetricConfig, x: &[f64], y: &[f64], opts: ReportOptions) -> Result<Self, MetricError> {
        let set = cfg.metric_set(x, y, opts.norm)?;
        let verdict = match opts.tolerance {
            Some((eps, mode)) => {
                let outcome = cfg.check(x, y, &eps, mode)?;
                Some(Verdict {
                    eps,
                    mode: mode.to_string(),
                    pass: outcome.pass,
                })
            }
            None => None,
        };
        let per_element = if opts.per_element {
            let rows = cfg.elementwise_report(x, y)?;
            Some(
                rows.iter()
                    .enumerate()
                    .map(|(index, t)| ElementRow {
                        index,
                        x: x[index],
                        y: y[index],
                        abs: t.abs,
                        rel: t.rel,
                        hyb: t.hyb,
                    })
                    .collect(),
            )
        } else {
            None
        };
        Ok(Self {
            n: set.n,
            mean: (&set.mean).into(),
            max: (&set.max).into(),
            vector: VectorSummary {
                norm: set.norm.to_string(),
                abs: set.vector.abs,
                rel: set.vector.rel,
                hyb: set.vector.hyb,
            },
            boundary: set.mehe(),
            verdict,
            per_element,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering: six significant digits for metrics, the
    /// boundary in shortest round-trip form so it can be pasted into `--eps`.
    pub fn to_text(&self) -> String {
        let rel = |r: Option<f64>| r.map(sig6).unwrap_or_else(|| "undefined".into());
        let mut out = String::new();
        let _ = writeln!(out, "n         {}", self.n);
        let _ = writeln!(out, "{:<10}{:<16}{:<16}{}", "", "abs", "rel", "hyb");
        for (label, s) in [("mean", &self.mean), ("max", &self.max)] {
            let _ = writeln!(out, "{label:<10}{:<16}{:<16}{}", sig6(s.abs), rel(s.rel), sig6(s.hyb));
        }
        let v = &self.vector;
        let _ = writeln!(
            out,
            "{:<10}{:<16}{:<16}{}",
            format!("vector({})", v.norm),
            sig6(v.abs),
            rel(v.rel),
            sig6(v.hyb)
        );
        let _ = writeln!(out, "boundary  {}", shortest_repr(self.boundary));
        if let Some(v) = &self.verdict {
            let _ = writeln!(
                out,
                "verdict   {} (eps = {}, mode {})",
                if v.pass { "PASS" } else { "FAIL" },
                shortest_repr(v.eps),
                v.mode
            );
        }
        if let Some(rows) = &self.per_element {
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "{:<8}{:<24}{:<24}{:<16}{:<16}{}",
                "index", "x", "y", "abs", "rel", "hyb"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<8}{:<24}{:<24}{:<16}{:<16}{}",
                    r.index,
                    shortest_repr(r.x),
                    shortest_repr(r.y),
                    sig6(r.abs),
                    rel(r.rel),
                    sig6(r.hyb)
                );
            }
        }
        out
    }
}
