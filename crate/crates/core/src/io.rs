//! Loading and writing numeric series.
//!
//! Three on-disk formats are supported:
//!
//! - CSV: UTF-8, comma separated, LF or CRLF, no quoting. One value per row
//!   is taken from the selected column; an optional single header row can be
//!   skipped. Blank lines are allowed only at the end of the file.
//! - JSON: a single top-level array of numbers.
//! - f64le: densely packed little-endian binary64 values with no header.
//!
//! Numbers are parsed with the correctly rounded binary64 parser, and
//! written with the shortest decimal that reads back to the same bits, so
//! every format round-trips exactly.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::agg::NumericSeries;
use crate::error::Side;
use crate::metrics::NonFinitePolicy;
use crate::scalar::Scalar;

/// On-disk encoding of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesFormat {
    /// `column` is zero-based.
    Csv { column: usize, skip_header: bool },
    Json,
    F64Le,
}

impl SeriesFormat {
    pub const CSV: Self = SeriesFormat::Csv {
        column: 0,
        skip_header: false,
    };

    /// Guesses the format from a file extension (`csv`, `txt`, `json`, `f64`,
    /// `f64le`, `bin`, `raw`).
    pub fn from_extension(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "csv" | "txt" => Some(Self::CSV),
            "json" => Some(SeriesFormat::Json),
            "f64" | "f64le" | "bin" | "raw" => Some(SeriesFormat::F64Le),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SeriesFormat::Csv { .. } => "csv",
            SeriesFormat::Json => "json",
            SeriesFormat::F64Le => "f64le",
        }
    }
}

impl FromStr for SeriesFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::CSV),
            "json" => Ok(SeriesFormat::Json),
            "f64le" => Ok(SeriesFormat::F64Le),
            other => Err(format!("unknown format `{other}` (expected csv, json or f64le)")),
        }
    }
}

impl fmt::Display for SeriesFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A file and how to decode it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSource {
    pub path: PathBuf,
    pub format: SeriesFormat,
}

impl SeriesSource {
    pub fn new(path: impl Into<PathBuf>, format: SeriesFormat) -> Self {
        Self {
            path: path.into(),
            format,
        }
    }

    /// Picks the format from the extension.
    pub fn detect(path: impl Into<PathBuf>) -> Result<Self, DataError> {
        let path = path.into();
        match SeriesFormat::from_extension(&path) {
            Some(format) => Ok(Self { path, format }),
            None => Err(DataError::UnknownFormat { path }),
        }
    }
}

/// Where in a file a parse error occurred. Rows and elements are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Row(usize),
    LineColumn { line: usize, column: usize },
    Element(usize),
    Byte(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Row(r) => write!(f, "row {r}"),
            Location::LineColumn { line, column } => write!(f, "line {line}, column {column}"),
            Location::Element(i) => write!(f, "element {i}"),
            Location::Byte(b) => write!(f, "byte {b}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum DataError {
    #[error("{}: file not found", .path.display())]
    FileNotFound { path: PathBuf },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}: parse error at {location}: {detail}", .path.display())]
    Parse {
        path: PathBuf,
        location: Location,
        detail: String,
    },
    #[error("{}: no values", .path.display())]
    EmptySeries { path: PathBuf },
    #[error("{}: {len} bytes is not a whole number of 8-byte values ({trailing} trailing)", .path.display())]
    TrailingBytes {
        path: PathBuf,
        len: usize,
        trailing: usize,
    },
    #[error("{}: row {row} has {available} column(s), column {column} requested", .path.display())]
    ColumnOutOfRange {
        path: PathBuf,
        row: usize,
        column: usize,
        available: usize,
    },
    #[error("{}: cannot infer format from extension", .path.display())]
    UnknownFormat { path: PathBuf },
    #[error("length mismatch: approximation has {x} values, reference has {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("non-finite {side} value at index {index}")]
    NonFiniteAt { index: usize, side: Side },
}

/// Two series validated for comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct PairedInput<T> {
    pub x: NumericSeries<T>,
    pub y: NumericSeries<T>,
}

/// Reads a series in file order; the label is the path.
pub fn load_series(src: &SeriesSource) -> Result<NumericSeries<f64>, DataError> {
    let path = &src.path;
    let bytes = fs::read(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => DataError::FileNotFound { path: path.clone() },
        _ => DataError::Io {
            path: path.clone(),
            source: e,
        },
    })?;
    let values = match src.format {
        SeriesFormat::Csv {
            column,
            skip_header,
        } => parse_csv(path, &bytes, column, skip_header)?,
        SeriesFormat::Json => parse_json(path, &bytes)?,
        SeriesFormat::F64Le => parse_f64le(path, &bytes)?,
    };
    if values.is_empty() {
        return Err(DataError::EmptySeries { path: path.clone() });
    }
    Ok(NumericSeries::new(values, path.display().to_string()))
}

fn parse_csv(path: &Path, bytes: &[u8], column: usize, skip_header: bool) -> Result<Vec<f64>, DataError> {
    let text = std::str::from_utf8(bytes).map_err(|e| DataError::Parse {
        path: path.to_path_buf(),
        location: Location::Byte(e.valid_up_to() + 1),
        detail: "invalid UTF-8".into(),
    })?;
    let mut lines: Vec<&str> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    let mut values = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        let row = i + 1;
        if skip_header && row == 1 {
            continue;
        }
        let parse_err = |detail: String| DataError::Parse {
            path: path.to_path_buf(),
            location: Location::Row(row),
            detail,
        };
        if line.trim().is_empty() {
            return Err(parse_err("blank line".into()));
        }
        let Some(field) = line.split(',').nth(column) else {
            return Err(DataError::ColumnOutOfRange {
                path: path.to_path_buf(),
                row,
                column,
                available: line.split(',').count(),
            });
        };
        let field = field.trim();
        let v = field
            .parse::<f64>()
            .map_err(|_| parse_err(format!("`{field}` is not a number")))?;
        values.push(v);
    }
    Ok(values)
}

fn parse_json(path: &Path, bytes: &[u8]) -> Result<Vec<f64>, DataError> {
    let doc: serde_json::Value = serde_json::from_slice(bytes).map_err(|e| DataError::Parse {
        path: path.to_path_buf(),
        location: Location::LineColumn {
            line: e.line(),
            column: e.column(),
        },
        detail: e.to_string(),
    })?;
    let serde_json::Value::Array(items) = doc else {
        return Err(DataError::Parse {
            path: path.to_path_buf(),
            location: Location::Element(0),
            detail: "expected a top-level array of numbers".into(),
        });
    };
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_f64().ok_or_else(|| DataError::Parse {
                path: path.to_path_buf(),
                location: Location::Element(i + 1),
                detail: format!("expected a number, found `{v}`"),
            })
        })
        .collect()
}

fn parse_f64le(path: &Path, bytes: &[u8]) -> Result<Vec<f64>, DataError> {
    let trailing = bytes.len() % 8;
    if trailing != 0 {
        return Err(DataError::TrailingBytes {
            path: path.to_path_buf(),
            len: bytes.len(),
            trailing,
        });
    }
    Ok(bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
        .collect())
}

/// Shortest decimal text that parses back to exactly `v`.
///
/// Plain notation for moderate magnitudes, scientific otherwise; both
/// use the minimal digit count.
pub fn shortest_repr(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || !a.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Writes `values` in `format`, the inverse of [`load_series`].
///
/// JSON has no NaN or infinity, so non-finite values are written as `null`
/// and will not load back.
pub fn write_series(path: &Path, format: SeriesFormat, values: &[f64]) -> Result<(), DataError> {
    let bytes = match format {
        SeriesFormat::Csv {
            column,
            skip_header,
        } => {
            let mut out = String::new();
            if skip_header {
                for c in 0..=column {
                    if c > 0 {
                        out.push(',');
                    }
                    out.push_str(if c == column { "value" } else { "unused" });
                }
                out.push('\n');
            }
            for v in values {
                for _ in 0..column {
                    out.push_str("0,");
                }
                out.push_str(&shortest_repr(*v));
                out.push('\n');
            }
            out.into_bytes()
        }
        SeriesFormat::Json => serde_json::to_vec(values).expect("serializing floats cannot fail"),
        SeriesFormat::F64Le => values.iter().flat_map(|v| v.to_le_bytes()).collect(),
    };
    fs::write(path, bytes).map_err(|source| DataError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Validates that `x` and `y` can be compared and applies the non-finite
/// policy, reporting the first offending index.
pub fn pair_inputs<T: Scalar>(
    x: NumericSeries<T>,
    y: NumericSeries<T>,
    policy: NonFinitePolicy,
) -> Result<PairedInput<T>, DataError> {
    if x.len() != y.len() {
        return Err(DataError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    if policy == NonFinitePolicy::Reject {
        for (index, (a, b)) in x.values().iter().zip(y.values()).enumerate() {
            if !a.is_finite_value() {
                return Err(DataError::NonFiniteAt {
                    index,
                    side: Side::Approximation,
                });
            }
            if !b.is_finite_value() {
                return Err(DataError::NonFiniteAt {
                    index,
                    side: Side::Reference,
                });
            }
        }
    }
    Ok(PairedInput { x, y })
}
