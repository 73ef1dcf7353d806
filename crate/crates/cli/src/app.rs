//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 success or passing check, 1 failed tolerance check,
//! 2 usage or I/O error.

use std::error::Error;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyberr::{
    load_series, pair_inputs, CheckMode, ErrorMetric, MetricConfig, NonFinitePolicy, NormKind,
    PairedInput, SeriesFormat, SeriesSource, SmoothFactor,
};

use crate::render::shortest_repr;
use crate::report::{ComparisonReport, ReportOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

type Failure = Box<dyn Error + Send + Sync>;

#[derive(Debug, Parser)]
#[command(
    name = "hyberr",
    version,
    about = "Compare numeric files with Hyb Error |x-y|/(1+|y|) and report the tightest passing isclose tolerance"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print all nine error metrics and the boundary for a pair of files.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        /// Norm for the vector errors.
        #[arg(long, default_value = "1", value_parser = parse_norm)]
        norm: NormKind,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
        /// Include the per-element table.
        #[arg(long)]
        per_element: bool,
        /// Also report whether every element passes at (eps, eps).
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, value_enum, default_value_t = Mode::Hyb)]
        mode: Mode,
    },
    /// Exit 0 if every element is close at tolerance (eps, eps), 1 otherwise.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = Mode::Hyb)]
        mode: Mode,
    },
    /// Print the maximum element-wise Hyb Error, the tightest passing eps.
    Boundary {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Emit CSV samples of the ratios to absolute and relative error over
    /// log-spaced |y|.
    Ratios {
        #[arg(long)]
        y_min: f64,
        #[arg(long)]
        y_max: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long, value_enum, default_value_t = RatioMetric::Hyb)]
        metric: RatioMetric,
        /// Smooth factor for `--metric alt1`.
        #[arg(long, default_value_t = 5.0)]
        t: f64,
    },
    /// Recompute and print the built-in nine-point example table.
    Table,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Approximation file.
    pub x: PathBuf,
    /// Reference file.
    pub y: PathBuf,
    /// Input format: once for both files, or twice for x then y. Detected
    /// from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Vec<FormatArg>,
    /// Zero-based CSV column: once for both files, or twice for x then y.
    #[arg(long)]
    pub column: Vec<usize>,
    /// Skip the first row of CSV inputs.
    #[arg(long)]
    pub skip_header: bool,
    #[arg(long, value_enum, default_value_t = PolicyArg::Reject)]
    pub policy: PolicyArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    F64le,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Hyb,
    #[value(alias = "max-variant")]
    Max,
}

impl From<Mode> for CheckMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Hyb => CheckMode::Hyb,
            Mode::Max => CheckMode::Max,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Reject,
    Propagate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RatioMetric {
    Hyb,
    Alt1,
    Alt2,
}

fn parse_norm(s: &str) -> Result<NormKind, String> {
    s.parse()
}

impl InputArgs {
    fn config(&self) -> MetricConfig {
        MetricConfig::with_policy(match self.policy {
            PolicyArg::Reject => NonFinitePolicy::Reject,
            PolicyArg::Propagate => NonFinitePolicy::Propagate,
        })
    }

    fn sources(&self) -> Result<(SeriesSource, SeriesSource), Failure> {
        if self.format.len() > 2 {
            return Err("--format may be given at most twice".into());
        }
        if self.column.len() > 2 {
            return Err("--column may be given at most twice".into());
        }
        let pick = |i: usize, path: &PathBuf| -> Result<SeriesSource, Failure> {
            let format = match self.format.get(i).or(self.format.first()) {
                Some(FormatArg::Csv) => SeriesFormat::CSV,
                Some(FormatArg::Json) => SeriesFormat::Json,
                Some(FormatArg::F64le) => SeriesFormat::F64Le,
                None => SeriesSource::detect(path.clone())?.format,
            };
            let format = match format {
                SeriesFormat::Csv { .. } => SeriesFormat::Csv {
                    column: self.column.get(i).or(self.column.first()).copied().unwrap_or(0),
                    skip_header: self.skip_header,
                },
                other => other,
            };
            Ok(SeriesSource::new(path.clone(), format))
        };
        let (x, y) = (pick(0, &self.x)?, pick(1, &self.y)?);
        let any_csv = [&x, &y]
            .iter()
            .any(|s| matches!(s.format, SeriesFormat::Csv { .. }));
        if !any_csv && (!self.column.is_empty() || self.skip_header) {
            return Err("--column and --skip-header apply to CSV inputs only".into());
        }
        Ok((x, y))
    }

    /// Loads both files (concurrently) and pairs them.
    fn load(&self) -> Result<PairedInput<f64>, Failure> {
        let (xs, ys) = self.sources()?;
        let (x, y) = std::thread::scope(|s| {
            let hx = s.spawn(|| load_series(&xs));
            let y = load_series(&ys);
            (hx.join().expect("loader thread panicked"), y)
        });
        let policy = self.config().policy;
        Ok(pair_inputs(x?, y?, policy)?)
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hyberr: error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Compare {
            input,
            norm,
            emit,
            per_element,
            eps,
            mode,
        } => {
            let pair = input.load()?;
            let opts = ReportOptions {
                norm,
                per_element,
                tolerance: eps.map(|e| (e, mode.into())),
            };
            let report =
                ComparisonReport::build(&input.config(), pair.x.values(), pair.y.values(), opts)?;
            match emit {
                Emit::Text => write!(out, "{}", report.to_text())?,
                Emit::Json => writeln!(out, "{}", report.to_json())?,
            }
            Ok(EXIT_OK)
        }
        Command::Check { input, eps, mode } => {
            let pair = input.load()?;
            let cfg = input.config();
            let (x, y) = (pair.x.values(), pair.y.values());
            let mode = CheckMode::from(mode);
            let outcome = cfg.check(x, y, &eps, mode)?;
            let boundary = shortest_repr(outcome.boundary);
            match outcome.first_failure {
                None => {
                    writeln!(
                        out,
                        "PASS: all {} elements close at eps = {} (mode {mode}); boundary {boundary}",
                        x.len(),
                        shortest_repr(eps)
                    )?;
                    Ok(EXIT_OK)
                }
                Some(i) => {
                    let row = &cfg.elementwise_report(&x[i..=i], &y[i..=i])?[0];
                    let rel = row.rel.map(shortest_repr).unwrap_or_else(|| "undefined".into());
                    writeln!(
                        out,
                        "FAIL: element {i}: x = {}, y = {}, abs = {}, rel = {rel}, hyb = {} (eps = {}, mode {mode})",
                        shortest_repr(x[i]),
                        shortest_repr(y[i]),
                        shortest_repr(row.abs),
                        shortest_repr(row.hyb),
                        shortest_repr(eps),
                    )?;
                    writeln!(out, "boundary (tightest passing eps): {boundary}")?;
                    Ok(EXIT_CHECK_FAILED)
                }
            }
        }
        Command::Boundary { input } => {
            let pair = input.load()?;
            let b = input
                .config()
                .mehe_boundary(pair.x.values(), pair.y.values())?;
            writeln!(out, "{}", shortest_repr(b))?;
            Ok(EXIT_OK)
        }
        Command::Ratios {
            y_min,
            y_max,
            points,
            metric,
            t,
        } => {
            let metric = match metric {
                RatioMetric::Hyb => ErrorMetric::Hyb,
                RatioMetric::Alt1 => ErrorMetric::Smoothed(SmoothFactor::new(t)?),
                RatioMetric::Alt2 => ErrorMetric::MaxDenominator,
            };
            write!(out, "{}", ratios_csv(y_min, y_max, points, &metric)?)?;
            Ok(EXIT_OK)
        }
        Command::Table => {
            write!(out, "{}", crate::table::render())?;
            Ok(EXIT_OK)
        }
    }
}

/// `points` log-spaced samples of `|y|` from `y_min` to `y_max` inclusive.
pub fn log_grid(y_min: f64, y_max: f64, points: usize) -> Result<Vec<f64>, String> {
    if !(y_min > 0.0 && y_min.is_finite()) {
        return Err(format!("y-min must be positive and finite, got {y_min}"));
    }
    if !(y_max > y_min && y_max.is_finite()) {
        return Err(format!("y-max must be finite and greater than y-min, got {y_max}"));
    }
    if points < 2 {
        return Err(format!("points must be at least 2, got {points}"));
    }
    let (lo, hi) = (y_min.log10(), y_max.log10());
    let last = points - 1;
    Ok((0..points)
        .map(|i| match i {
            0 => y_min,
            i if i == last => y_max,
            i => 10f64.powf(lo + (hi - lo) * i as f64 / last as f64),
        })
        .collect())
}

/// CSV with header `y,k_abs,k_rel`.
pub fn ratios_csv(y_min: f64, y_max: f64, points: usize, metric: &ErrorMetric<f64>) -> Result<String, String> {
    let mut out = String::from("y,k_abs,k_rel\n");
    for y in log_grid(y_min, y_max, points)? {
        out.push_str(&format!(
            "{},{},{}\n",
            shortest_repr(y),
            shortest_repr(metric.k_abs(&y)),
            shortest_repr(metric.k_rel(&y))
        ));
    }
    Ok(out)
}
