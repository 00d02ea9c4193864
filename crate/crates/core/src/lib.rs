//! A vertex-centric iterative graph engine.
//!
//! Programs implement [`VertexProgram`] once and run unchanged on three
//! execution models:
//!
//! * [`Mode::Standard`]: classic bulk-synchronous supersteps. Every message
//!   sent in superstep `S` is consumed in `S + 1`.
//! * [`Mode::Am`]: supersteps with asynchronous messaging. A message to a
//!   vertex of the same partition lands directly in its queue and is consumed
//!   in the same superstep if the receiver has not run yet.
//! * [`Mode::Hybrid`]: global iterations made of a global phase, which runs
//!   each active boundary vertex once, followed by a local phase of in-memory
//!   pseudo-supersteps that iterate a partition to quiescence. Cross-partition
//!   traffic is exchanged only at the barrier between global iterations.
//!
//! The [`graph`] module builds the partitioned topology, [`algorithms`] holds
//! shortest paths, PageRank and bipartite matching programs, and [`oracle`]
//! provides independent reference implementations used by the tests.

pub mod algorithms;
pub mod engine;
mod error;
pub mod graph;
pub mod oracle;

pub use engine::{
    run, run_am, run_hybrid, run_standard, AggregateOp, Combiner, Context, EngineConfig, Message, Mode, RunMetrics,
    RunOutcome, SourceCombine, TerminationReport, VertexProgram,
};
pub use error::{EngineError, GraphError};
pub use graph::{
    Edge, Graph, GraphFormat, GraphSpec, PartitionMap, PartitionedGraph, RawEdge, Side, VertexClass, VertexId,
};
