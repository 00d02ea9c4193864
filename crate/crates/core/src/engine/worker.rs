use std::mem;
use std::sync::atomic::{AtomicUsize, Ordering};

use super::combine::reduce_batch;
use super::program::{Combiner, Context, Message, SourceCombine, VertexProgram};
use super::routing::{route_message, Placement, RoutePhase};
use super::{AggregateOp, EngineConfig};
use crate::error::EngineError;
use crate::graph::{PartitionedGraph, VertexId};

pub(crate) struct Slot<V, M> {
    pub value: V,
    pub active: bool,
    /// Messages consumable now (`lMsgs` in hybrid mode).
    pub inbox: Vec<Message<M>>,
    /// Messages for the next superstep or pseudo-superstep.
    pub next: Vec<Message<M>>,
    /// `bMsgs`: held for the next global phase.
    pub boundary: Vec<Message<M>>,
}

impl<V, M> Slot<V, M> {
    fn pending(&self) -> usize {
        self.inbox.len() + self.next.len() + self.boundary.len()
    }
}

/// What kind of step a vertex executes in, which decides where its sends
/// are queued.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Superstep {
        async_local: bool,
    },
    /// Hybrid iteration 0.
    Init,
    Global,
    Local {
        async_local: bool,
    },
}

impl Step {
    fn route_phase(self) -> RoutePhase {
        match self {
            Step::Superstep { .. } => RoutePhase::StandardSuperstep,
            Step::Init | Step::Global => RoutePhase::Global,
            Step::Local { .. } => RoutePhase::Local,
        }
    }

    /// True when a same-partition message may be consumed during the step
    /// that produced it.
    fn immediate(self) -> bool {
        match self {
            Step::Superstep { async_local } | Step::Local { async_local } => async_local,
            Step::Global => true,
            Step::Init => false,
        }
    }
}

#[derive(Clone, Copy)]
enum Queue {
    Inbox,
    Boundary,
}

/// Read-only state shared by all workers during a phase.
pub(crate) struct Shared<'a, P: VertexProgram> {
    pub graph: &'a PartitionedGraph,
    pub program: &'a P,
    pub config: &'a EngineConfig,
    pub aggregated: Option<f64>,
    pub aggregator: Option<AggregateOp>,
    pub combiner: Option<Combiner<P::Message>>,
    pub source_rule: SourceCombine<P::Message>,
    pub in_local_phase: &'a AtomicUsize,
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct WorkerCounters {
    pub sent: u64,
    pub placed_local: u64,
    pub placed_boundary: u64,
    pub placed_remote: u64,
    pub pseudo_supersteps: u64,
    pub executions: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PhaseEnd {
    Done,
    /// The local phase hit its pseudo-superstep cap.
    Capped,
}

/// Executes every vertex of one partition and owns its queues.
pub(crate) struct PartitionWorker<P: VertexProgram> {
    pub index: usize,
    pub slots: Vec<Slot<P::Value, P::Message>>,
    /// `rMsgs`.
    pub remote: Vec<Message<P::Message>>,
    pub partial_aggregate: Option<f64>,
    pub counters: WorkerCounters,
    pub pseudo_superstep_cap: u64,
    seq: u64,
    outbox: Vec<(VertexId, P::Message)>,
    boundary_locals: Vec<usize>,
    participants: Vec<usize>,
}

impl<P: VertexProgram> PartitionWorker<P> {
    pub fn new(index: usize, graph: &PartitionedGraph, program: &P, config: &EngineConfig) -> Self {
        let members = graph.members(index);
        let slots = members
            .iter()
            .map(|&v| Slot {
                value: program.initial_value(v, graph),
                active: true,
                inbox: Vec::new(),
                next: Vec::new(),
                boundary: Vec::new(),
            })
            .collect();
        let boundary_locals = (0..members.len()).filter(|&i| graph.is_boundary(members[i])).collect();
        let participants = (0..members.len())
            .filter(|&i| config.boundary_participation || !graph.is_boundary(members[i]))
            .collect();
        let pseudo_superstep_cap = config
            .pseudo_superstep_cap
            .unwrap_or_else(|| (10 * members.len() as u64).max(1000));
        Self {
            index,
            slots,
            remote: Vec::new(),
            partial_aggregate: None,
            counters: WorkerCounters::default(),
            pseudo_superstep_cap,
            seq: 0,
            outbox: Vec::new(),
            boundary_locals,
            participants,
        }
    }

    pub fn active_count(&self) -> u64 {
        self.slots.iter().filter(|s| s.active).count() as u64
    }

    pub fn pending_count(&self) -> u64 {
        (self.slots.iter().map(Slot::pending).sum::<usize>() + self.remote.len()) as u64
    }

    fn rotate(&mut self) {
        for slot in &mut self.slots {
            if !slot.next.is_empty() {
                slot.inbox.append(&mut slot.next);
            }
        }
    }

    fn execute(
        &mut self,
        shared: &Shared<'_, P>,
        local: usize,
        queue: Queue,
        step: Step,
        superstep: u64,
        pseudo_superstep: Option<u64>,
    ) -> Result<(), EngineError> {
        let vertex = shared.graph.members(self.index)[local];
        let slot = &mut self.slots[local];
        let mut messages = match queue {
            Queue::Inbox => mem::take(&mut slot.inbox),
            Queue::Boundary => mem::take(&mut slot.boundary),
        };
        if shared.config.combiner_enabled && messages.len() > 1 {
            messages = reduce_batch(messages, &shared.source_rule, shared.combiner);
        }
        messages.sort_by_key(|m| (m.source, m.seq));

        let mut ctx = Context {
            graph: shared.graph,
            vertex,
            superstep,
            pseudo_superstep,
            aggregated: shared.aggregated,
            aggregator: shared.aggregator,
            partial_aggregate: &mut self.partial_aggregate,
            outbox: &mut self.outbox,
            halted: false,
        };
        shared.program.compute(&mut ctx, &mut slot.value, &messages);
        slot.active = !ctx.halted;
        self.counters.executions += 1;
        self.flush_outbox(shared, vertex, step)
    }

    fn flush_outbox(&mut self, shared: &Shared<'_, P>, source: VertexId, step: Step) -> Result<(), EngineError> {
        let graph = shared.graph;
        let mut outbox = mem::take(&mut self.outbox);
        for (target, payload) in outbox.drain(..) {
            if !graph.contains(target) {
                return Err(EngineError::UnknownTarget {
                    source_vertex: source,
                    target,
                });
            }
            let msg = Message {
                source,
                target,
                seq: self.seq,
                payload,
            };
            self.seq += 1;
            self.counters.sent += 1;
            let placement = route_message(
                graph,
                self.index,
                target,
                step.route_phase(),
                shared.config.boundary_participation,
            );
            match placement {
                Placement::Remote => {
                    self.counters.placed_remote += 1;
                    self.remote.push(msg);
                }
                Placement::Boundary => {
                    self.counters.placed_boundary += 1;
                    self.slots[graph.local_index(target)].boundary.push(msg);
                }
                Placement::Local => {
                    self.counters.placed_local += 1;
                    let slot = &mut self.slots[graph.local_index(target)];
                    if step.immediate() {
                        slot.inbox.push(msg);
                    } else {
                        slot.next.push(msg);
                    }
                }
            }
        }
        self.outbox = outbox;
        Ok(())
    }

    /// One superstep over every vertex in ascending id order. Also used for
    /// hybrid iteration 0 with `Step::Init`.
    pub fn superstep(&mut self, shared: &Shared<'_, P>, superstep: u64, step: Step) -> Result<PhaseEnd, EngineError> {
        self.rotate();
        for local in 0..self.slots.len() {
            let slot = &self.slots[local];
            if slot.active || !slot.inbox.is_empty() {
                self.execute(shared, local, Queue::Inbox, step, superstep, None)?;
            }
        }
        Ok(PhaseEnd::Done)
    }

    /// Runs `compute` once on every boundary vertex that is active or has
    /// buffered boundary messages.
    pub fn global_phase(&mut self, shared: &Shared<'_, P>, iteration: u64) -> Result<(), EngineError> {
        for i in 0..self.boundary_locals.len() {
            let local = self.boundary_locals[i];
            let slot = &self.slots[local];
            if slot.active || !slot.boundary.is_empty() {
                self.execute(shared, local, Queue::Boundary, Step::Global, iteration, None)?;
            }
        }
        Ok(())
    }

    /// Pseudo-supersteps over the participating vertices until none is
    /// active and no local message is pending.
    pub fn local_phase(&mut self, shared: &Shared<'_, P>, iteration: u64) -> Result<PhaseEnd, EngineError> {
        shared.in_local_phase.fetch_add(1, Ordering::SeqCst);
        let result = self.local_phase_inner(shared, iteration);
        shared.in_local_phase.fetch_sub(1, Ordering::SeqCst);
        result
    }

    fn local_phase_inner(&mut self, shared: &Shared<'_, P>, iteration: u64) -> Result<PhaseEnd, EngineError> {
        let async_local = shared.config.async_local_messaging;
        let step = Step::Local { async_local };
        let mut count = 0u64;
        loop {
            if !async_local {
                self.rotate();
            }
            let pending = self.participants.iter().any(|&l| {
                let s = &self.slots[l];
                s.active || !s.inbox.is_empty()
            });
            if !pending {
                return Ok(PhaseEnd::Done);
            }
            if count >= self.pseudo_superstep_cap {
                return Ok(PhaseEnd::Capped);
            }
            for i in 0..self.participants.len() {
                let local = self.participants[i];
                let slot = &self.slots[local];
                if slot.active || !slot.inbox.is_empty() {
                    self.execute(shared, local, Queue::Inbox, step, iteration, Some(count))?;
                }
            }
            count += 1;
            self.counters.pseudo_supersteps += 1;
        }
    }

    /// One hybrid global iteration: global phase, then local phase.
    pub fn hybrid_iteration(&mut self, shared: &Shared<'_, P>, iteration: u64) -> Result<PhaseEnd, EngineError> {
        self.rotate();
        self.global_phase(shared, iteration)?;
        self.local_phase(shared, iteration)
    }
}
