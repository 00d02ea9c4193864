use std::fmt::Write as _;
use std::path::Path;

use clap::Parser;

use crate::cli::RunArgs;
use crate::error::BenchError;
use crate::manifest::Manifest;
use crate::record::{csv_header, MetricsRecord};
use crate::runner::{execute, RunResult};

#[derive(Parser)]
#[command(name = "suite-line", no_binary_name = true)]
struct SuiteLine {
    #[command(flatten)]
    args: RunArgs,
}

/// Expands every `{a,b,...}` token into the cartesian product of lines.
pub fn expand_line(line: &str) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for token in line.split_whitespace() {
        let choices: Vec<String> = match token.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            Some(inner) => inner.split(',').map(str::to_string).collect(),
            None => vec![token.to_string()],
        };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Parses a suite. Blank lines and `#` comments are skipped. Each entry is
/// tagged with its 1-based line number.
pub fn parse_suite(text: &str) -> Vec<(usize, Result<Manifest, BenchError>)> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        for tokens in expand_line(line) {
            let parsed = SuiteLine::try_parse_from(&tokens)
                .map_err(|e| BenchError::Usage(e.render().to_string().trim().to_string()))
                .and_then(|l| {
                    if l.args.out.is_some() || l.args.dump_values.is_some() {
                        return Err(BenchError::Usage(
                            "--out and --dump-values are not allowed in a suite".into(),
                        ));
                    }
                    l.args.manifest()
                });
            entries.push((i + 1, parsed));
        }
    }
    entries
}

#[derive(Debug, Default)]
pub struct SuiteReport {
    pub results: Vec<RunResult>,
    /// Line number, exit status and message of each failed entry.
    pub failures: Vec<(usize, i32, String)>,
}

impl SuiteReport {
    pub fn rows(&self) -> Vec<MetricsRecord> {
        self.results.iter().map(RunResult::record).collect()
    }

    pub fn csv(&self) -> String {
        let mut s = csv_header();
        s.push('\n');
        for row in self.rows() {
            s += &row.to_csv();
            s.push('\n');
        }
        s
    }

    /// Iterations and messages per (algorithm, graph, engine, k).
    pub fn plot_csv(&self) -> String {
        let mut s =
            String::from("algo,graph,part,engine,k,delta,iterations,remote_messages,pseudo_supersteps,converged\n");
        for r in &self.results {
            let m = &r.manifest;
            let delta = m.delta.map(|d| format!("{d:e}")).unwrap_or_default();
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{}",
                m.algo,
                m.graph,
                m.part,
                m.engine,
                m.k,
                delta,
                r.metrics.global_iterations,
                r.metrics.remote_messages,
                r.metrics.pseudo_supersteps,
                r.metrics.converged
            );
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if let Some((_, code, _)) = self.failures.first() {
            *code
        } else if self.results.iter().any(|r| !r.metrics.converged) {
            2
        } else {
            0
        }
    }
}

/// Runs every entry of `text` in order. A failing entry is recorded and
/// the suite continues.
pub fn run_suite_text(text: &str) -> SuiteReport {
    let mut report = SuiteReport::default();
    for (line, manifest) in parse_suite(text) {
        match manifest.and_then(|m| execute(&m)) {
            Ok(result) => report.results.push(result),
            Err(e) => report.failures.push((line, e.exit_code(), e.to_string())),
        }
    }
    report
}

/// Runs the suite file and writes the metrics CSV, plus the plot CSV if
/// requested. Failed entries are reported on stderr.
pub fn run_suite(file: &Path, out: &Path, plot_out: Option<&Path>) -> Result<SuiteReport, BenchError> {
    let text =
        std::fs::read_to_string(file).map_err(|e| BenchError::io(format!("cannot read {}", file.display()), e))?;
    let report = run_suite_text(&text);
    for (line, _, msg) in &report.failures {
        eprintln!("FAILED {}:{line}: {msg}", file.display());
    }
    let write = |path: &Path, body: String| {
        std::fs::write(path, body).map_err(|e| BenchError::io(format!("cannot write {}", path.display()), e))
    };
    write(out, report.csv())?;
    if let Some(p) = plot_out {
        write(p, report.plot_csv())?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braces_expand_to_a_product() {
        let lines = expand_line("--k {2,4} --engine {standard,hybrid}");
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[3], vec!["--k", "4", "--engine", "hybrid"]);
    }

    #[test]
    fn empty_suite_has_header_only() {
        let report = run_suite_text("# nothing here\n\n");
        assert_eq!(report.csv(), format!("{}\n", csv_header()));
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn bad_entries_are_flagged_and_the_suite_continues() {
        let text = "--algo sssp --gen grid:4x4\n--algo sssp --gen grid:4x4 --source 0\n";
        let report = run_suite_text(text);
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].0, 1);
        assert_eq!(report.exit_code(), 1);
    }
}
