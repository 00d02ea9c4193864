use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("vertex {0} has no partition assignment")]
    MissingVertex(u64),
    #[error("vertex {vertex} assigned to partition {partition}, but only {k} partitions exist")]
    PartitionOutOfRange { vertex: u64, partition: usize, k: usize },
    #[error("edge {src} -> {dst} has invalid weight {weight}")]
    InvalidWeight { src: u64, dst: u64, weight: f64 },
    #[error("graph is not bipartite: edge {src} -> {dst} joins two vertices on the same side")]
    NotBipartite { src: u64, dst: u64 },
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("vertex {source_vertex} sent a message to nonexistent vertex {target}")]
    UnknownTarget { source_vertex: VertexId, target: VertexId },
    #[error("invalid engine configuration: {0}")]
    Config(String),
}
