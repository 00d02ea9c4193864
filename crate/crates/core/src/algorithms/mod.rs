//! Vertex programs for shortest paths, PageRank and bipartite matching.

mod matching;
mod pagerank;
mod sssp;

pub use matching::{HybridMatching, LeftState, MatchState, MatchValue, RightState, StandardMatching, Token};
pub use pagerank::{IncrementalPageRank, PlainPageRank, PlainRank, DAMPING, TELEPORT};
pub use sssp::Sssp;
