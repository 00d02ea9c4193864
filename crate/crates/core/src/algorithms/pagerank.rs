use crate::engine::{Combiner, Context, Message, VertexProgram};
use crate::error::EngineError;
use crate::graph::{PartitionedGraph, VertexId};

pub const DAMPING: f64 = 0.85;
pub const TELEPORT: f64 = 0.15;

fn sum(a: &f64, b: &f64) -> f64 {
    a + b
}

/// Accumulative PageRank. Each vertex adds incoming deltas to its rank and
/// forwards `0.85·delta/outdeg` to its out-neighbours while the delta is at
/// least the tolerance. Converges to `r = 0.15 + 0.85·Σ r_u/outdeg_u`.
/// Vertices without out-edges absorb what they receive.
#[derive(Debug, Clone, Copy)]
pub struct IncrementalPageRank {
    pub tolerance: f64,
}

impl IncrementalPageRank {
    pub fn new(tolerance: f64) -> Result<Self, EngineError> {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(EngineError::Config(format!("tolerance {tolerance} must be positive")));
        }
        Ok(Self { tolerance })
    }
}

impl VertexProgram for IncrementalPageRank {
    type Value = f64;
    type Message = f64;

    fn initial_value(&self, _vertex: VertexId, _graph: &PartitionedGraph) -> f64 {
        0.0
    }

    fn compute(&self, ctx: &mut Context<'_, f64>, value: &mut f64, messages: &[Message<f64>]) {
        let initial = ctx.superstep() == 0;
        let delta = if initial {
            *value = 0.0;
            TELEPORT
        } else {
            messages.iter().map(|m| m.payload).sum()
        };
        *value += delta;
        let degree = ctx.out_degree();
        if degree > 0 && (initial || delta >= self.tolerance) {
            let share = DAMPING * delta / degree as f64;
            for e in ctx.out_edges() {
                ctx.send(e.target, share);
            }
        }
        ctx.vote_to_halt();
    }

    fn combiner(&self) -> Option<Combiner<f64>> {
        Some(sum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlainRank {
    pub rank: f64,
    /// Damped updates applied so far.
    pub updates: u32,
}

/// Classic PageRank with a fixed number of damped updates. Superstep 0 sets
/// every rank to `1/N`; each later step computes
/// `0.15/N + 0.85·Σ incoming`. Vertices stay active until they have applied
/// `budget` updates. A vertex with in-edges that wakes with an empty queue
/// halts without updating and is woken again by the next message, so
/// engines that run vertices between barriers do not reset its rank.
#[derive(Debug, Clone, Copy)]
pub struct PlainPageRank {
    pub budget: u32,
}

impl PlainPageRank {
    pub fn new(budget: u32) -> Result<Self, EngineError> {
        if budget < 1 {
            return Err(EngineError::Config("PageRank budget must be at least 1".into()));
        }
        Ok(Self { budget })
    }
}

impl VertexProgram for PlainPageRank {
    type Value = PlainRank;
    type Message = f64;

    fn initial_value(&self, _vertex: VertexId, _graph: &PartitionedGraph) -> PlainRank {
        PlainRank::default()
    }

    fn compute(&self, ctx: &mut Context<'_, f64>, value: &mut PlainRank, messages: &[Message<f64>]) {
        let n = ctx.num_vertices() as f64;
        if ctx.superstep() == 0 {
            *value = PlainRank {
                rank: 1.0 / n,
                updates: 0,
            };
        } else if messages.is_empty() && ctx.in_degree() > 0 {
            ctx.vote_to_halt();
            return;
        } else {
            let incoming: f64 = messages.iter().map(|m| m.payload).sum();
            value.rank = TELEPORT / n + DAMPING * incoming;
            value.updates += 1;
        }
        if value.updates >= self.budget {
            ctx.vote_to_halt();
            return;
        }
        let degree = ctx.out_degree();
        if degree > 0 {
            let share = value.rank / degree as f64;
            for e in ctx.out_edges() {
                ctx.send(e.target, share);
            }
        }
    }

    fn combiner(&self) -> Option<Combiner<f64>> {
        Some(sum)
    }
}
