use crate::engine::{Combiner, Context, Message, SourceCombine, VertexProgram};
use crate::graph::{PartitionedGraph, VertexId};

/// Single-source shortest paths by wavefront relaxation. Unreachable
/// vertices keep `f64::INFINITY`.
#[derive(Debug, Clone, Copy)]
pub struct Sssp {
    pub source: VertexId,
}

impl Sssp {
    pub fn new(source: VertexId) -> Self {
        Self { source }
    }
}

fn min(a: &f64, b: &f64) -> f64 {
    a.min(*b)
}

impl VertexProgram for Sssp {
    type Value = f64;
    type Message = f64;

    fn initial_value(&self, _vertex: VertexId, _graph: &PartitionedGraph) -> f64 {
        f64::INFINITY
    }

    fn compute(&self, ctx: &mut Context<'_, f64>, value: &mut f64, messages: &[Message<f64>]) {
        let improved = if ctx.superstep() == 0 {
            *value = if ctx.vertex() == self.source {
                0.0
            } else {
                f64::INFINITY
            };
            ctx.vertex() == self.source
        } else {
            let best = messages.iter().map(|m| m.payload).fold(f64::INFINITY, f64::min);
            if best < *value {
                *value = best;
                true
            } else {
                false
            }
        };
        if improved {
            for e in ctx.out_edges() {
                ctx.send(e.target, *value + e.weight);
            }
        }
        ctx.vote_to_halt();
    }

    fn combiner(&self) -> Option<Combiner<f64>> {
        Some(min)
    }

    // Parallel edges can carry different weights, so "latest" is not always
    // the smallest; keep the minimum per sender instead.
    fn source_combiner(&self) -> SourceCombine<f64> {
        SourceCombine::Custom(min)
    }
}
