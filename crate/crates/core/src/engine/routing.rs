use crate::graph::{PartitionedGraph, VertexId};

/// Which execution step is sending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoutePhase {
    StandardSuperstep,
    Global,
    Local,
}

/// The queue a message lands in, from the sending partition's point of view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    /// `lMsgs` of a vertex in the sender's partition.
    Local,
    /// `bMsgs` of a boundary vertex in the sender's partition, held until
    /// the next global phase.
    Boundary,
    /// `rMsgs`: buffered for delivery at the next barrier.
    Remote,
}

/// Three-way routing. Cross-partition targets always go to `rMsgs`. In a
/// standard superstep every same-partition target is treated alike. In hybrid
/// phases a same-partition boundary target is buffered in `bMsgs` unless
/// boundary vertices participate in local phases, in which case it is
/// treated as local.
pub fn route_message(
    graph: &PartitionedGraph,
    sender_partition: usize,
    target: VertexId,
    phase: RoutePhase,
    boundary_participation: bool,
) -> Placement {
    if graph.partition_of(target) != sender_partition {
        return Placement::Remote;
    }
    match phase {
        RoutePhase::StandardSuperstep => Placement::Local,
        RoutePhase::Global | RoutePhase::Local => {
            if graph.is_boundary(target) && !boundary_participation {
                Placement::Boundary
            } else {
                Placement::Local
            }
        }
    }
}
