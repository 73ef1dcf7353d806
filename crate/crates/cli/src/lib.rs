//! Command-line front end for the `hyberr` metrics: `compare`, `check`,
//! `boundary`, `ratios` and `table`.

pub mod app;
pub mod render;
pub mod report;
pub mod table;

pub use app::{run, Cli, EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK};
pub use report::{ComparisonReport, ReportOptions};
