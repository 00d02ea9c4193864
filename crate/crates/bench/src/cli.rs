use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hybrid_bsp::{GraphFormat, GraphSpec, Mode};

use crate::error::BenchError;
use crate::manifest::{Algo, GraphSource, Manifest, PartSource};
use crate::record::{append_csv, csv_header};
use crate::runner::execute;
use crate::suite::run_suite;

#[derive(Debug, Parser)]
#[command(
    name = "hbsp",
    version,
    about = "Run vertex programs on the standard, AM and hybrid engines"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Execute one run and emit a metrics row.
    Run(RunArgs),
    /// Execute every manifest of a suite file.
    Suite(SuiteArgs),
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["gen", "graph"])))]
pub struct RunArgs {
    /// sssp | pagerank-inc | pagerank-plain | bm
    #[arg(long)]
    pub algo: Algo,
    /// standard | am | hybrid
    #[arg(long, default_value = "hybrid")]
    pub engine: Mode,
    /// Generator spec: grid:WxH, bipartite:LxR:P, powerlaw:N:M, random:N:P[:MAXW]
    #[arg(long)]
    pub gen: Option<String>,
    /// Graph file to load.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// edgelist | dimacs-gr | snap
    #[arg(long, default_value = "edgelist")]
    pub format: GraphFormat,
    /// Number of partitions.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// hash | blocks | file:PATH
    #[arg(long, default_value = "hash")]
    pub part: PartSource,
    /// SSSP source vertex (original id).
    #[arg(long)]
    pub source: Option<u64>,
    /// Seed for generators and randomized programs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Incremental PageRank tolerance.
    #[arg(long)]
    pub delta: Option<f64>,
    /// Plain PageRank update budget.
    #[arg(long)]
    pub budget: Option<u32>,
    #[arg(long)]
    pub no_boundary_participation: bool,
    #[arg(long)]
    pub no_async: bool,
    #[arg(long)]
    pub no_combiner: bool,
    #[arg(long, default_value_t = 100_000)]
    pub max_iterations: u64,
    /// Append the metrics row to this CSV file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write `vertexId value` lines here.
    #[arg(long)]
    pub dump_values: Option<PathBuf>,
}

impl RunArgs {
    pub fn manifest(&self) -> Result<Manifest, BenchError> {
        let graph = match (&self.gen, &self.graph) {
            (Some(spec), _) => GraphSource::Generated(GraphSpec::parse(spec, self.seed)?),
            (None, Some(path)) => GraphSource::File {
                path: path.clone(),
                format: self.format,
            },
            (None, None) => return Err(BenchError::Usage("one of --gen or --graph is required".into())),
        };
        let manifest = Manifest {
            algo: self.algo,
            engine: self.engine,
            graph,
            k: self.k,
            part: self.part.clone(),
            source: self.source,
            delta: self.delta,
            budget: self.budget,
            seed: self.seed,
            boundary_participation: !self.no_boundary_participation,
            async_local_messaging: !self.no_async,
            combiner: !self.no_combiner,
            max_iterations: self.max_iterations,
        };
        manifest.validate()?;
        Ok(manifest)
    }
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// One run per line, written as `run` flags. `{a,b,c}` expands.
    pub file: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Plot-ready CSV: iterations and messages against k per engine.
    #[arg(long)]
    pub plot_out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Run(args) => run_command(&args),
        Command::Suite(args) => run_suite(&args.file, &args.out, args.plot_out.as_deref()).map(|r| r.exit_code()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run_command(args: &RunArgs) -> Result<i32, BenchError> {
    let manifest = args.manifest()?;
    println!("# manifest: {}", manifest.canonical());
    let result = execute(&manifest)?;
    let record = result.record();
    match &args.out {
        Some(path) => append_csv(path, std::slice::from_ref(&record))?,
        None => println!("{}\n{}", csv_header(), record.to_csv()),
    }
    if let Some(path) = &args.dump_values {
        std::fs::write(path, &result.values)
            .map_err(|e| BenchError::io(format!("cannot write {}", path.display()), e))?;
    }
    if record.converged {
        Ok(0)
    } else {
        eprintln!("run did not converge within {} iterations", manifest.max_iterations);
        Ok(2)
    }
}
