use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use crate::error::BenchError;

pub const CSV_COLUMNS: [&str; 11] = [
    "manifest_hash",
    "algo",
    "engine",
    "k",
    "seed",
    "iterations",
    "remote_messages",
    "pseudo_supersteps",
    "time_s",
    "converged",
    "values_checksum",
];

pub fn csv_header() -> String {
    CSV_COLUMNS.join(",")
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRecord {
    pub manifest_hash: String,
    pub algo: String,
    pub engine: String,
    pub k: usize,
    pub seed: u64,
    pub iterations: u64,
    pub remote_messages: u64,
    pub pseudo_supersteps: u64,
    pub time_s: f64,
    pub converged: bool,
    pub values_checksum: String,
}

impl MetricsRecord {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{:.6},{},{}",
            self.manifest_hash,
            self.algo,
            self.engine,
            self.k,
            self.seed,
            self.iterations,
            self.remote_messages,
            self.pseudo_supersteps,
            self.time_s,
            self.converged,
            self.values_checksum
        )
    }
}

/// Appends rows to `path`, writing the header first if the file is new or
/// empty.
pub fn append_csv(path: &Path, rows: &[MetricsRecord]) -> Result<(), BenchError> {
    let ctx = || format!("cannot write {}", path.display());
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| BenchError::io(ctx(), e))?;
    let empty = file.metadata().map_err(|e| BenchError::io(ctx(), e))?.len() == 0;
    let mut out = String::new();
    if empty {
        out += &csv_header();
        out.push('\n');
    }
    for row in rows {
        out += &row.to_csv();
        out.push('\n');
    }
    file.write_all(out.as_bytes()).map_err(|e| BenchError::io(ctx(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> MetricsRecord {
        MetricsRecord {
            manifest_hash: "abc".into(),
            algo: "sssp".into(),
            engine: "hybrid".into(),
            k: 8,
            seed: 1,
            iterations: 12,
            remote_messages: 340,
            pseudo_supersteps: 99,
            time_s: 0.25,
            converged: true,
            values_checksum: "ff".into(),
        }
    }

    #[test]
    fn row_has_one_field_per_column() {
        assert_eq!(row().to_csv().split(',').count(), CSV_COLUMNS.len());
        assert_eq!(row().to_csv(), "abc,sssp,hybrid,8,1,12,340,99,0.250000,true,ff");
    }

    #[test]
    fn header_written_once() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.csv");
        append_csv(&path, &[row()]).unwrap();
        append_csv(&path, &[row()]).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], csv_header());
    }
}
