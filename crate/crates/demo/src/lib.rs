//! Browser demo: three interactive operations returning JSON strings.
//!
//! * [`grid_sssp`]: shortest paths on a grid, compared across engines.
//! * [`pagerank_sweep`]: PageRank iterations against the tolerance.
//! * [`bipartite_matching`]: lock-step versus hybrid matching.

use hybrid_bsp::algorithms::{HybridMatching, IncrementalPageRank, MatchValue, Sssp, StandardMatching};
use hybrid_bsp::oracle::check_matching;
use hybrid_bsp::{run, EngineConfig, GraphSpec, Mode, PartitionMap, PartitionedGraph, RunMetrics, VertexClass};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MODES: [Mode; 3] = [Mode::Standard, Mode::Am, Mode::Hybrid];

#[derive(Serialize)]
struct EngineStats {
    engine: String,
    iterations: u64,
    remote_messages: u64,
    pseudo_supersteps: u64,
    converged: bool,
}

impl EngineStats {
    fn new(mode: Mode, m: &RunMetrics) -> Self {
        Self {
            engine: mode.to_string(),
            iterations: m.global_iterations,
            remote_messages: m.remote_messages,
            pseudo_supersteps: m.pseudo_supersteps,
            converged: m.converged,
        }
    }
}

#[derive(Serialize)]
struct GridReport {
    width: usize,
    height: usize,
    partition: Vec<u32>,
    boundary: Vec<bool>,
    /// `null` for unreachable cells.
    distances: Vec<Option<f64>>,
    engines: Vec<EngineStats>,
}

#[derive(Serialize)]
struct SweepPoint {
    delta: f64,
    engines: Vec<EngineStats>,
}

#[derive(Serialize)]
struct SweepReport {
    vertices: usize,
    edges: usize,
    points: Vec<SweepPoint>,
}

#[derive(Serialize)]
struct MatchingRun {
    program: String,
    stats: EngineStats,
    pairs: Vec<(u32, u32)>,
    valid: bool,
    maximal: bool,
}

#[derive(Serialize)]
struct MatchingReport {
    left: usize,
    right: usize,
    edges: Vec<(u32, u32)>,
    partition: Vec<u32>,
    runs: Vec<MatchingRun>,
}

fn partition(n: usize, k: usize, blocks: bool) -> Result<PartitionMap, String> {
    let map = if blocks {
        PartitionMap::blocks(n, k)
    } else {
        PartitionMap::hash(n, k)
    };
    map.map_err(|e| e.to_string())
}

fn config(mode: Mode) -> EngineConfig {
    let mut c = EngineConfig::new(mode);
    c.max_iterations = 10_000;
    c
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| format!(r#"{{"error":"{e}"}}"#)),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

fn grid_sssp_inner(width: usize, height: usize, k: usize, blocks: bool, source: u32) -> Result<GridReport, String> {
    if width * height > 40_000 {
        return Err("grid too large for the demo (max 40000 cells)".into());
    }
    let g = GraphSpec::Grid { width, height }
        .generate()
        .map_err(|e| e.to_string())?;
    if source as usize >= g.num_vertices() {
        return Err(format!("source {source} is outside the grid"));
    }
    let pg = PartitionedGraph::classify(&g, partition(g.num_vertices(), k, blocks)?).map_err(|e| e.to_string())?;
    let mut engines = Vec::new();
    let mut distances = Vec::new();
    for mode in MODES {
        let out = run(&pg, &Sssp::new(source), &config(mode)).map_err(|e| e.to_string())?;
        engines.push(EngineStats::new(mode, &out.metrics));
        distances = out.values.iter().map(|&d| d.is_finite().then_some(d)).collect();
    }
    Ok(GridReport {
        width,
        height,
        partition: pg.partition_map().assignment().to_vec(),
        boundary: (0..g.num_vertices() as u32)
            .map(|v| pg.class(v) == VertexClass::Boundary)
            .collect(),
        distances,
        engines,
    })
}

fn pagerank_sweep_inner(n: usize, k: usize, seed: u64) -> Result<SweepReport, String> {
    if n > 20_000 {
        return Err("graph too large for the demo (max 20000 vertices)".into());
    }
    let g = GraphSpec::PowerLaw { n, m: 3, seed }
        .generate()
        .map_err(|e| e.to_string())?;
    let pg = PartitionedGraph::classify(&g, partition(n, k, true)?).map_err(|e| e.to_string())?;
    let mut points = Vec::new();
    for delta in [1e-2, 1e-3, 1e-4, 1e-5, 1e-6] {
        let program = IncrementalPageRank::new(delta).map_err(|e| e.to_string())?;
        let mut engines = Vec::new();
        for mode in MODES {
            let out = run(&pg, &program, &config(mode)).map_err(|e| e.to_string())?;
            engines.push(EngineStats::new(mode, &out.metrics));
        }
        points.push(SweepPoint { delta, engines });
    }
    Ok(SweepReport {
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        points,
    })
}

fn matching_run(
    g: &hybrid_bsp::Graph,
    program: &str,
    mode: Mode,
    values: &[MatchValue],
    metrics: &RunMetrics,
) -> MatchingRun {
    let partners: Vec<_> = values.iter().map(MatchValue::partner).collect();
    let check = check_matching(g, &partners);
    MatchingRun {
        program: program.to_string(),
        stats: EngineStats::new(mode, metrics),
        pairs: partners
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.filter(|&p| (v as u32) < p).map(|p| (v as u32, p)))
            .collect(),
        valid: check.valid,
        maximal: check.maximal,
    }
}

fn bipartite_matching_inner(left: usize, right: usize, p: f64, k: usize, seed: u64) -> Result<MatchingReport, String> {
    if left + right > 2_000 {
        return Err("graph too large for the demo (max 2000 vertices)".into());
    }
    let g = GraphSpec::RandomBipartite { left, right, p, seed }
        .generate()
        .map_err(|e| e.to_string())?;
    let n = g.num_vertices();
    let pg = PartitionedGraph::classify(&g, partition(n, k, true)?).map_err(|e| e.to_string())?;
    let lockstep = StandardMatching::for_graph(&pg, seed).map_err(|e| e.to_string())?;
    let stage_free = HybridMatching::for_graph(&pg, seed).map_err(|e| e.to_string())?;
    let s = run(&pg, &lockstep, &config(Mode::Standard)).map_err(|e| e.to_string())?;
    let h = run(&pg, &stage_free, &config(Mode::Hybrid)).map_err(|e| e.to_string())?;
    Ok(MatchingReport {
        left,
        right,
        edges: g
            .edges()
            .iter()
            .filter(|e| e.source < e.target)
            .map(|e| (e.source, e.target))
            .collect(),
        partition: pg.partition_map().assignment().to_vec(),
        runs: vec![
            matching_run(&g, "lock-step", Mode::Standard, &s.values, &s.metrics),
            matching_run(&g, "stage-free", Mode::Hybrid, &h.values, &h.metrics),
        ],
    })
}

/// Runs SSSP from `source` on a `width`×`height` grid split into `k`
/// partitions (row blocks if `blocks`, otherwise `id mod k`) with every
/// engine.
#[wasm_bindgen]
pub fn grid_sssp(width: usize, height: usize, k: usize, blocks: bool, source: u32) -> String {
    to_json(grid_sssp_inner(width, height, k, blocks, source))
}

/// Incremental PageRank on an `n`-vertex power-law graph in `k` blocks for
/// tolerances 1e-2 down to 1e-6.
#[wasm_bindgen]
pub fn pagerank_sweep(n: usize, k: usize, seed: u32) -> String {
    to_json(pagerank_sweep_inner(n, k, seed.into()))
}

/// Lock-step matching on the standard engine against stage-free matching
/// on the hybrid engine.
#[wasm_bindgen]
pub fn bipartite_matching(left: usize, right: usize, p: f64, k: usize, seed: u32) -> String {
    to_json(bipartite_matching_inner(left, right, p, k, seed.into()))
}
