use crate::graph::{Edge, PartitionedGraph, Side, VertexClass, VertexId};

use super::aggregate::AggregateOp;

/// A message in flight. `seq` is the sender-side sequence number; queues
/// are consumed in `(source, seq)` order.
#[derive(Debug, Clone, PartialEq)]
pub struct Message<M> {
    pub source: VertexId,
    pub target: VertexId,
    pub seq: u64,
    pub payload: M,
}

/// Associative, commutative reduction of two payloads.
pub type Combiner<M> = fn(&M, &M) -> M;

/// How messages sharing both source and target are reduced before delivery.
#[derive(Debug, Clone, Copy)]
pub enum SourceCombine<M> {
    Disabled,
    /// Keep only the most recently sent message of each group.
    KeepLatest,
    Custom(Combiner<M>),
}

/// The user-supplied per-vertex step.
///
/// `compute` may read and write only its own vertex value and out-edges;
/// every cross-vertex effect goes through [`Context::send`]. Vertices start
/// active, stay active until they call [`Context::vote_to_halt`], and are
/// woken again by any incoming message.
pub trait VertexProgram: Sync {
    type Value: Clone + Send + Sync;
    type Message: Clone + Send + Sync;

    fn initial_value(&self, vertex: VertexId, graph: &PartitionedGraph) -> Self::Value;

    fn compute(
        &self,
        ctx: &mut Context<'_, Self::Message>,
        value: &mut Self::Value,
        messages: &[Message<Self::Message>],
    );

    /// Per-target combiner, applied to remote batches before delivery and
    /// to incoming queues before consumption.
    fn combiner(&self) -> Option<Combiner<Self::Message>> {
        None
    }

    /// Per-(source, target) reduction, applied before `combiner`.
    fn source_combiner(&self) -> SourceCombine<Self::Message> {
        SourceCombine::Disabled
    }

    fn aggregator(&self) -> Option<AggregateOp> {
        None
    }
}

/// Handle passed to [`VertexProgram::compute`].
pub struct Context<'a, M> {
    pub(crate) graph: &'a PartitionedGraph,
    pub(crate) vertex: VertexId,
    pub(crate) superstep: u64,
    pub(crate) pseudo_superstep: Option<u64>,
    pub(crate) aggregated: Option<f64>,
    pub(crate) aggregator: Option<AggregateOp>,
    pub(crate) partial_aggregate: &'a mut Option<f64>,
    pub(crate) outbox: &'a mut Vec<(VertexId, M)>,
    pub(crate) halted: bool,
}

impl<'a, M: Clone> Context<'a, M> {
    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    /// Superstep index in standard and AM modes, global iteration index in
    /// hybrid mode. The first step is 0.
    pub fn superstep(&self) -> u64 {
        self.superstep
    }

    /// Index of the current pseudo-superstep when running inside a hybrid
    /// local phase.
    pub fn pseudo_superstep(&self) -> Option<u64> {
        self.pseudo_superstep
    }

    pub fn out_edges(&self) -> &'a [Edge] {
        self.graph.out_edges(self.vertex)
    }

    pub fn out_degree(&self) -> usize {
        self.out_edges().len()
    }

    pub fn in_degree(&self) -> usize {
        self.graph.in_degree(self.vertex) as usize
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn side(&self) -> Option<Side> {
        self.graph.side(self.vertex)
    }

    pub fn class(&self) -> VertexClass {
        self.graph.class(self.vertex)
    }

    pub fn send(&mut self, target: VertexId, payload: M) {
        self.outbox.push((target, payload));
    }

    pub fn send_to_neighbors(&mut self, payload: M) {
        for e in self.graph.out_edges(self.vertex) {
            self.outbox.push((e.target, payload.clone()));
        }
    }

    /// Deactivates the vertex once `compute` returns.
    pub fn vote_to_halt(&mut self) {
        self.halted = true;
    }

    /// Submits a value to the program's aggregator. Ignored when the program
    /// declares none.
    pub fn aggregate(&mut self, value: f64) {
        if let Some(op) = self.aggregator {
            *self.partial_aggregate = Some(match *self.partial_aggregate {
                Some(acc) => op.apply(acc, value),
                None => value,
            });
        }
    }

    /// The aggregate reduced at the previous barrier.
    pub fn aggregated(&self) -> Option<f64> {
        self.aggregated
    }

    /// Messages sent so far during this call, in send order.
    pub fn outgoing(&self) -> &[(VertexId, M)] {
        self.outbox
    }
}
