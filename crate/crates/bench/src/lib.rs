//! Run manifests, metrics records and suite execution for `hbsp`.

mod cli;
mod error;
mod manifest;
mod record;
mod runner;
mod suite;

pub use cli::{main_with_args, Cli, Command, RunArgs, SuiteArgs};
pub use error::BenchError;
pub use manifest::{Algo, GraphSource, Manifest, PartSource};
pub use record::{append_csv, csv_header, MetricsRecord, CSV_COLUMNS};
pub use runner::{execute, RunResult};
pub use suite::{expand_line, parse_suite, run_suite, run_suite_text, SuiteReport};
