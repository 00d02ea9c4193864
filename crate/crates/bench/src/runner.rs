use std::fmt::Write as _;
use std::time::Instant;

use hybrid_bsp::algorithms::{HybridMatching, IncrementalPageRank, PlainPageRank, Sssp, StandardMatching};
use hybrid_bsp::graph::{load_graph, load_partition_map};
use hybrid_bsp::{run, EngineConfig, Graph, Mode, PartitionMap, PartitionedGraph, RunMetrics, VertexProgram};

use crate::error::BenchError;
use crate::manifest::{short_digest, Algo, GraphSource, Manifest, PartSource};
use crate::record::MetricsRecord;

#[derive(Debug, Clone)]
pub struct RunResult {
    pub manifest: Manifest,
    pub metrics: RunMetrics,
    /// `originalId value` lines in vertex order.
    pub values: String,
    pub checksum: String,
}

impl RunResult {
    pub fn record(&self) -> MetricsRecord {
        MetricsRecord {
            manifest_hash: self.manifest.hash(),
            algo: self.manifest.algo.to_string(),
            engine: self.manifest.engine.to_string(),
            k: self.manifest.k,
            seed: self.manifest.seed,
            iterations: self.metrics.global_iterations,
            remote_messages: self.metrics.remote_messages,
            pseudo_supersteps: self.metrics.pseudo_supersteps,
            time_s: self.metrics.wall_time.as_secs_f64(),
            converged: self.metrics.converged,
            values_checksum: self.checksum.clone(),
        }
    }
}

pub fn load(manifest: &Manifest) -> Result<Graph, BenchError> {
    Ok(match &manifest.graph {
        GraphSource::Generated(spec) => spec.generate()?,
        GraphSource::File { path, format } => load_graph(path, *format)?,
    })
}

fn partition(manifest: &Manifest, graph: &Graph) -> Result<PartitionedGraph, BenchError> {
    let n = graph.num_vertices();
    let map = match &manifest.part {
        PartSource::Hash => PartitionMap::hash(n, manifest.k)?,
        PartSource::Blocks => PartitionMap::blocks(n, manifest.k)?,
        PartSource::File(path) => load_partition_map(path, graph, manifest.k)?,
    };
    Ok(PartitionedGraph::classify(graph, map)?)
}

/// Loads or generates the graph, partitions it and runs the configured
/// program. Only the engine run is timed.
pub fn execute(manifest: &Manifest) -> Result<RunResult, BenchError> {
    manifest.validate()?;
    let graph = load(manifest)?;
    let pg = partition(manifest, &graph)?;
    let mut config = EngineConfig::new(manifest.engine);
    config.boundary_participation = manifest.boundary_participation;
    config.async_local_messaging = manifest.async_local_messaging;
    config.combiner_enabled = manifest.combiner;
    config.max_iterations = manifest.max_iterations;

    let (metrics, values) = match manifest.algo {
        Algo::Sssp => {
            let original = manifest.source.expect("validated");
            let source = graph
                .vertex_by_original(original)
                .ok_or_else(|| BenchError::Usage(format!("source vertex {original} is not in the graph")))?;
            timed(&pg, &Sssp::new(source), &config, |d| format!("{d}"))
        }
        Algo::PagerankInc => {
            let program = IncrementalPageRank::new(manifest.delta.expect("validated"))?;
            timed(&pg, &program, &config, |r| format!("{r}"))
        }
        Algo::PagerankPlain => {
            let program = PlainPageRank::new(manifest.budget.expect("validated"))?;
            timed(&pg, &program, &config, |r| format!("{}", r.rank))
        }
        Algo::Bm => {
            let show = |v: &hybrid_bsp::algorithms::MatchValue| match v.partner() {
                Some(p) => graph.original_id(p).to_string(),
                None => "-".to_string(),
            };
            if manifest.engine == Mode::Standard {
                timed(&pg, &StandardMatching::for_graph(&pg, manifest.seed)?, &config, show)
            } else {
                timed(&pg, &HybridMatching::for_graph(&pg, manifest.seed)?, &config, show)
            }
        }
    }?;

    let mut text = String::new();
    for (v, value) in values.iter().enumerate() {
        let _ = writeln!(text, "{} {value}", graph.original_id(v as u32));
    }
    Ok(RunResult {
        manifest: manifest.clone(),
        metrics,
        checksum: short_digest(text.as_bytes()),
        values: text,
    })
}

fn timed<P: VertexProgram>(
    pg: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
    show: impl Fn(&P::Value) -> String,
) -> Result<(RunMetrics, Vec<String>), BenchError> {
    let start = Instant::now();
    let outcome = run(pg, program, config)?;
    let mut metrics = outcome.metrics;
    metrics.wall_time = start.elapsed();
    Ok((metrics, outcome.values.iter().map(show).collect()))
}
