//! Execution engines and the vertex-program contract they share.

mod aggregate;
mod combine;
mod metrics;
mod program;
mod routing;
mod worker;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

pub use aggregate::{reduce_aggregates, AggregateOp};
pub use combine::{apply_combiner, apply_source_combiner};
pub use metrics::{RunMetrics, RunOutcome, TerminationReport};
pub use program::{Combiner, Context, Message, SourceCombine, VertexProgram};
pub use routing::{route_message, Placement, RoutePhase};

use crate::error::EngineError;
use crate::graph::PartitionedGraph;
use combine::reduce_batch;
use metrics::Stopwatch;
use worker::{PartitionWorker, PhaseEnd, Shared, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Standard,
    Am,
    Hybrid,
}

impl FromStr for Mode {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Self::Standard),
            "am" => Ok(Self::Am),
            "hybrid" => Ok(Self::Hybrid),
            other => Err(EngineError::Config(format!("unknown engine `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Standard => "standard",
            Self::Am => "am",
            Self::Hybrid => "hybrid",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EngineConfig {
    pub mode: Mode,
    /// Hybrid only: boundary vertices also run in local phases.
    pub boundary_participation: bool,
    /// Hybrid only: same-partition messages may be consumed within the
    /// pseudo-superstep that produced them.
    pub async_local_messaging: bool,
    pub combiner_enabled: bool,
    pub max_iterations: u64,
    /// Per-partition pseudo-superstep limit for a single local phase.
    /// Defaults to `max(10·|partition|, 1000)`.
    pub pseudo_superstep_cap: Option<u64>,
    /// Run partitions on the rayon pool. Results are identical either way.
    pub parallel: bool,
}

impl EngineConfig {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            boundary_participation: true,
            async_local_messaging: true,
            combiner_enabled: true,
            max_iterations: 100_000,
            pseudo_superstep_cap: None,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self::new(Mode::Standard)
    }
}

/// Runs `program` with the engine selected by `config.mode`.
pub fn run<P: VertexProgram>(
    graph: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
) -> Result<RunOutcome<P::Value>, EngineError> {
    match config.mode {
        Mode::Standard => run_standard(graph, program, config),
        Mode::Am => run_am(graph, program, config),
        Mode::Hybrid => run_hybrid(graph, program, config),
    }
}

/// Bulk-synchronous supersteps: messages sent in superstep `S` are consumed
/// in `S + 1`.
pub fn run_standard<P: VertexProgram>(
    graph: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
) -> Result<RunOutcome<P::Value>, EngineError> {
    drive(graph, program, config, |worker, shared, s| {
        worker.superstep(shared, s, Step::Superstep { async_local: false })
    })
}

/// Supersteps with asynchronous same-partition messaging. Superstep 0 is
/// identical to the standard model.
pub fn run_am<P: VertexProgram>(
    graph: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
) -> Result<RunOutcome<P::Value>, EngineError> {
    drive(graph, program, config, |worker, shared, s| {
        worker.superstep(shared, s, Step::Superstep { async_local: s > 0 })
    })
}

/// Hybrid execution: iteration 0 is a standard initialization superstep,
/// then each global iteration runs a global phase and a local phase per
/// partition, with cross-partition delivery only at the barrier.
pub fn run_hybrid<P: VertexProgram>(
    graph: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
) -> Result<RunOutcome<P::Value>, EngineError> {
    drive(graph, program, config, |worker, shared, i| {
        if i == 0 {
            worker.superstep(shared, 0, Step::Init)
        } else {
            worker.hybrid_iteration(shared, i)
        }
    })
}

fn drive<P, F>(
    graph: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
    iteration: F,
) -> Result<RunOutcome<P::Value>, EngineError>
where
    P: VertexProgram,
    F: Fn(&mut PartitionWorker<P>, &Shared<'_, P>, u64) -> Result<PhaseEnd, EngineError> + Sync,
{
    let mut engine = Engine::new(graph, program, config)?;
    let start = Stopwatch::start();
    let mut converged = false;
    while engine.metrics.global_iterations < config.max_iterations {
        let i = engine.metrics.global_iterations;
        let end = engine.step(|w, s| iteration(w, s, i))?;
        engine.metrics.global_iterations += 1;
        let report = engine.barrier();
        if end == PhaseEnd::Capped {
            break;
        }
        if report.is_terminated() {
            converged = true;
            break;
        }
    }
    engine.metrics.wall_time = start.elapsed();
    engine.metrics.converged = converged;
    Ok(engine.finish())
}

pub(crate) struct Engine<'a, P: VertexProgram> {
    graph: &'a PartitionedGraph,
    program: &'a P,
    config: &'a EngineConfig,
    workers: Vec<PartitionWorker<P>>,
    aggregated: Option<f64>,
    in_local_phase: AtomicUsize,
    metrics: RunMetrics,
}

impl<'a, P: VertexProgram> Engine<'a, P> {
    fn new(graph: &'a PartitionedGraph, program: &'a P, config: &'a EngineConfig) -> Result<Self, EngineError> {
        if config.max_iterations == 0 {
            return Err(EngineError::Config("max_iterations must be at least 1".into()));
        }
        if config.pseudo_superstep_cap == Some(0) {
            return Err(EngineError::Config("pseudo-superstep cap must be at least 1".into()));
        }
        let workers = (0..graph.num_partitions())
            .map(|p| PartitionWorker::new(p, graph, program, config))
            .collect();
        Ok(Self {
            graph,
            program,
            config,
            workers,
            aggregated: None,
            in_local_phase: AtomicUsize::new(0),
            metrics: RunMetrics::default(),
        })
    }

    /// Runs `f` on every worker, concurrently when configured. Errors are
    /// reported in partition order.
    fn step<F>(&mut self, f: F) -> Result<PhaseEnd, EngineError>
    where
        F: Fn(&mut PartitionWorker<P>, &Shared<'_, P>) -> Result<PhaseEnd, EngineError> + Sync,
    {
        let shared = Shared {
            graph: self.graph,
            program: self.program,
            config: self.config,
            aggregated: self.aggregated,
            aggregator: self.program.aggregator(),
            combiner: self.program.combiner(),
            source_rule: self.program.source_combiner(),
            in_local_phase: &self.in_local_phase,
        };
        let results: Vec<Result<PhaseEnd, EngineError>> = if self.config.parallel && self.workers.len() > 1 {
            par_map(&mut self.workers, |w| f(w, &shared))
        } else {
            self.workers.iter_mut().map(|w| f(w, &shared)).collect()
        };
        let mut end = PhaseEnd::Done;
        for r in results {
            if r? == PhaseEnd::Capped {
                end = PhaseEnd::Capped;
            }
        }
        Ok(end)
    }

    /// Combines and delivers every `rMsgs` buffer, reduces aggregates and
    /// reports whether the computation has terminated.
    fn barrier(&mut self) -> TerminationReport {
        if self.in_local_phase.load(Ordering::SeqCst) != 0 {
            self.metrics.local_phase_deliveries += 1;
        }
        self.metrics.barrier_deliveries += 1;
        let hybrid = self.config.mode == Mode::Hybrid;
        let combiner = self.program.combiner();
        let source_rule = self.program.source_combiner();
        for p in 0..self.workers.len() {
            let batch = std::mem::take(&mut self.workers[p].remote);
            self.metrics.remote_messages_uncombined += batch.len() as u64;
            let batch = if self.config.combiner_enabled {
                reduce_batch(batch, &source_rule, combiner)
            } else {
                batch
            };
            self.metrics.remote_messages += batch.len() as u64;
            for msg in batch {
                let target = msg.target;
                let dest = self.graph.partition_of(target);
                let slot = &mut self.workers[dest].slots[self.graph.local_index(target)];
                if hybrid && self.graph.is_boundary(target) {
                    slot.boundary.push(msg);
                } else {
                    slot.next.push(msg);
                }
            }
        }

        if let Some(op) = self.program.aggregator() {
            let partials = self.workers.iter_mut().map(|w| w.partial_aggregate.take());
            self.aggregated = Some(reduce_aggregates(partials, op));
        }

        let actives: Vec<u64> = self.workers.iter().map(|w| w.active_count()).collect();
        TerminationReport {
            active_vertices: actives.iter().sum(),
            in_transit: self.workers.iter().map(|w| w.pending_count()).sum(),
            max_partition_active: reduce_aggregates(actives.iter().map(|&a| Some(a as f64)), AggregateOp::Max).max(0.0)
                as u64,
        }
    }

    fn finish(mut self) -> RunOutcome<P::Value> {
        for w in &self.workers {
            let c = w.counters;
            self.metrics.messages_sent += c.sent;
            self.metrics.placed_local += c.placed_local;
            self.metrics.placed_boundary += c.placed_boundary;
            self.metrics.placed_remote += c.placed_remote;
            self.metrics.pseudo_supersteps += c.pseudo_supersteps;
            self.metrics.vertex_executions += c.executions;
        }
        let values = (0..self.graph.num_vertices() as u32)
            .map(|v| {
                let w = &self.workers[self.graph.partition_of(v)];
                w.slots[self.graph.local_index(v)].value.clone()
            })
            .collect();
        RunOutcome {
            values,
            metrics: self.metrics,
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map<T: Send, R: Send>(items: &mut [T], f: impl Fn(&mut T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter_mut().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R>(items: &mut [T], f: impl Fn(&mut T) -> R) -> Vec<R> {
    items.iter_mut().map(f).collect()
}
