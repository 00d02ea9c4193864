use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::GraphError;
use crate::graph::{Graph, VertexId};

fn check_weights(graph: &Graph) -> Result<(), GraphError> {
    match graph.edges().iter().find(|e| e.weight.is_nan() || e.weight < 0.0) {
        Some(e) => Err(GraphError::InvalidWeight {
            src: graph.original_id(e.source),
            dst: graph.original_id(e.target),
            weight: e.weight,
        }),
        None => Ok(()),
    }
}

fn adjacency(graph: &Graph) -> Vec<Vec<(usize, f64)>> {
    let mut adj = vec![Vec::new(); graph.num_vertices()];
    for e in graph.edges() {
        adj[e.source as usize].push((e.target as usize, e.weight));
    }
    adj
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact shortest distances from `source`; `f64::INFINITY` if unreachable.
pub fn dijkstra(graph: &Graph, source: VertexId) -> Result<Vec<f64>, GraphError> {
    check_weights(graph)?;
    let adj = adjacency(graph);
    let mut dist = vec![f64::INFINITY; graph.num_vertices()];
    let mut heap = BinaryHeap::new();
    dist[source as usize] = 0.0;
    heap.push(Entry(0.0, source as usize));
    while let Some(Entry(d, u)) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Entry(nd, v));
            }
        }
    }
    Ok(dist)
}

/// Edge-relaxation shortest paths, used to cross-check [`dijkstra`].
pub fn bellman_ford(graph: &Graph, source: VertexId) -> Result<Vec<f64>, GraphError> {
    check_weights(graph)?;
    let mut dist = vec![f64::INFINITY; graph.num_vertices()];
    dist[source as usize] = 0.0;
    for _ in 0..graph.num_vertices() {
        let mut changed = false;
        for e in graph.edges() {
            let nd = dist[e.source as usize] + e.weight;
            if nd < dist[e.target as usize] {
                dist[e.target as usize] = nd;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(dist)
}
