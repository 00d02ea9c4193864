use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankConvention {
    /// `r = 0.15 + 0.85·Σ r_u/outdeg_u`, starting from all zeros.
    Unnormalized,
    /// `r = 0.15/N + 0.85·Σ r_u/outdeg_u`, starting from `1/N`.
    Normalized,
}

/// `iters` synchronous applications of the damped update. Vertices without
/// out-edges keep their rank.
pub fn power_iteration(graph: &Graph, convention: RankConvention, iters: usize) -> Vec<f64> {
    let n = graph.num_vertices();
    let outdeg = graph.out_degrees();
    let (base, start) = match convention {
        RankConvention::Unnormalized => (0.15, 0.0),
        RankConvention::Normalized => (0.15 / n as f64, 1.0 / n as f64),
    };
    let mut rank = vec![start; n];
    let mut incoming = vec![0.0; n];
    for _ in 0..iters {
        incoming.iter_mut().for_each(|x| *x = 0.0);
        for e in graph.edges() {
            let u = e.source as usize;
            incoming[e.target as usize] += rank[u] / outdeg[u] as f64;
        }
        for v in 0..n {
            rank[v] = base + 0.85 * incoming[v];
        }
    }
    rank
}
