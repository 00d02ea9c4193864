//! Reference implementations that judge the engines. They read only the
//! raw [`Graph`](crate::graph::Graph) and share no code with the engine.

mod matching;
mod pagerank;
mod shortest_path;

pub use matching::{check_matching, MatchingCheck};
pub use pagerank::{power_iteration, RankConvention};
pub use shortest_path::{bellman_ford, dijkstra};
