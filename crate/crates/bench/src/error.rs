use hybrid_bsp::{EngineError, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl BenchError {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Self::Io {
            context: context.into(),
            source,
        }
    }

    /// Process exit status: 1 for usage and configuration errors, 3 for
    /// unreadable or malformed input and failed output.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } | Self::Graph(GraphError::Io(_) | GraphError::Parse { .. }) => 3,
            _ => 1,
        }
    }
}
