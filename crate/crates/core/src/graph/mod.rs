//! Directed graph topology, partitioning and local/boundary classification.

mod generate;
mod io;
mod partition;

use std::collections::HashMap;

pub use generate::GraphSpec;
pub use io::{load_graph, parse_graph, write_edge_list, GraphFormat};
pub use partition::{load_partition_map, parse_partition_map, write_partition_map, PartitionMap};

use crate::error::GraphError;

/// Dense vertex identifier in `[0, |V|)`.
pub type VertexId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A vertex is `Local` when every in-edge originates in its own partition
/// and `Boundary` otherwise. Vertices without in-edges are `Local`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Local,
    Boundary,
}

/// An edge as read from input, before partitioning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RawEdge {
    pub source: VertexId,
    pub target: VertexId,
    pub weight: f64,
}

/// An out-edge of a partitioned graph. `remote` is set when the target lives
/// in a different partition than the source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub target: VertexId,
    pub weight: f64,
    pub remote: bool,
}

/// A directed multigraph with dense ids and a side table of original ids.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<RawEdge>,
    original_ids: Vec<u64>,
    sides: Option<Vec<Side>>,
}

impl Graph {
    /// Builds a graph whose original ids equal its dense ids.
    pub fn new(num_vertices: usize, edges: Vec<RawEdge>) -> Result<Self, GraphError> {
        Self::with_original_ids((0..num_vertices as u64).collect(), edges)
    }

    pub fn with_original_ids(original_ids: Vec<u64>, edges: Vec<RawEdge>) -> Result<Self, GraphError> {
        let n = original_ids.len();
        for e in &edges {
            if e.source as usize >= n || e.target as usize >= n {
                return Err(GraphError::Config(format!(
                    "edge {} -> {} references a vertex outside [0, {n})",
                    e.source, e.target
                )));
            }
            if !(e.weight.is_finite() && e.weight >= 0.0) {
                return Err(GraphError::InvalidWeight {
                    src: original_ids[e.source as usize],
                    dst: original_ids[e.target as usize],
                    weight: e.weight,
                });
            }
        }
        Ok(Self {
            num_vertices: n,
            edges,
            original_ids,
            sides: None,
        })
    }

    /// Convenience constructor for unit-weight edge lists.
    pub fn from_pairs(num_vertices: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let edges = pairs
            .iter()
            .map(|&(source, target)| RawEdge {
                source,
                target,
                weight: 1.0,
            })
            .collect();
        Self::new(num_vertices, edges)
    }

    /// Attaches bipartite side tags, one per vertex.
    pub fn with_sides(mut self, sides: Vec<Side>) -> Result<Self, GraphError> {
        if sides.len() != self.num_vertices {
            return Err(GraphError::Config(format!(
                "{} side tags for {} vertices",
                sides.len(),
                self.num_vertices
            )));
        }
        self.sides = Some(sides);
        Ok(self)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[RawEdge] {
        &self.edges
    }

    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v as usize]
    }

    pub fn original_ids(&self) -> &[u64] {
        &self.original_ids
    }

    /// Maps an original id back to its dense id.
    pub fn vertex_by_original(&self, original: u64) -> Option<VertexId> {
        // Ids are compacted in ascending order, so the side table is sorted.
        if self.original_ids.windows(2).all(|w| w[0] < w[1]) {
            self.original_ids.binary_search(&original).ok().map(|i| i as VertexId)
        } else {
            self.original_ids
                .iter()
                .position(|&o| o == original)
                .map(|i| i as VertexId)
        }
    }

    pub fn sides(&self) -> Option<&[Side]> {
        self.sides.as_deref()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for e in &self.edges {
            deg[e.source as usize] += 1;
        }
        deg
    }

    /// Checks that side tags exist and every edge joins opposite sides.
    pub fn validate_bipartite(&self) -> Result<(), GraphError> {
        let sides = self
            .sides
            .as_ref()
            .ok_or_else(|| GraphError::Config("bipartite input requires side tags".into()))?;
        for e in &self.edges {
            if sides[e.source as usize] == sides[e.target as usize] {
                return Err(GraphError::NotBipartite {
                    src: self.original_id(e.source),
                    dst: self.original_id(e.target),
                });
            }
        }
        Ok(())
    }
}

/// The immutable topology the engines execute over: CSR out-adjacency,
/// partition assignment and local/boundary classification.
#[derive(Debug, Clone)]
pub struct PartitionedGraph {
    offsets: Vec<usize>,
    adjacency: Vec<Edge>,
    in_degree: Vec<u32>,
    class: Vec<VertexClass>,
    map: PartitionMap,
    members: Vec<Vec<VertexId>>,
    local_index: Vec<u32>,
    sides: Option<Vec<Side>>,
    original_ids: Vec<u64>,
}

impl PartitionedGraph {
    /// Partitions `graph` under `map`, flags remote edges and classifies
    /// every vertex as local or boundary.
    pub fn classify(graph: &Graph, map: PartitionMap) -> Result<Self, GraphError> {
        let n = graph.num_vertices();
        if map.len() != n {
            return Err(GraphError::Config(format!(
                "partition map covers {} vertices, graph has {n}",
                map.len()
            )));
        }

        let mut offsets = vec![0usize; n + 1];
        for e in graph.edges() {
            offsets[e.source as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut adjacency = vec![
            Edge {
                target: 0,
                weight: 0.0,
                remote: false
            };
            graph.num_edges()
        ];
        let mut in_degree = vec![0u32; n];
        let mut class = vec![VertexClass::Local; n];
        for e in graph.edges() {
            let remote = map.partition_of(e.source) != map.partition_of(e.target);
            let slot = &mut cursor[e.source as usize];
            adjacency[*slot] = Edge {
                target: e.target,
                weight: e.weight,
                remote,
            };
            *slot += 1;
            in_degree[e.target as usize] += 1;
            if remote {
                class[e.target as usize] = VertexClass::Boundary;
            }
        }

        let mut members = vec![Vec::new(); map.k()];
        let mut local_index = vec![0u32; n];
        for v in 0..n as VertexId {
            let p = map.partition_of(v);
            local_index[v as usize] = members[p].len() as u32;
            members[p].push(v);
        }

        Ok(Self {
            offsets,
            adjacency,
            in_degree,
            class,
            map,
            members,
            local_index,
            sides: graph.sides.clone(),
            original_ids: graph.original_ids.clone(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.in_degree.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_partitions(&self) -> usize {
        self.map.k()
    }

    pub fn out_edges(&self, v: VertexId) -> &[Edge] {
        let v = v as usize;
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn in_degree(&self, v: VertexId) -> u32 {
        self.in_degree[v as usize]
    }

    pub fn class(&self, v: VertexId) -> VertexClass {
        self.class[v as usize]
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.class(v) == VertexClass::Boundary
    }

    pub fn partition_of(&self, v: VertexId) -> usize {
        self.map.partition_of(v)
    }

    pub fn partition_map(&self) -> &PartitionMap {
        &self.map
    }

    /// Vertices of partition `p` in ascending id order.
    pub fn members(&self, p: usize) -> &[VertexId] {
        &self.members[p]
    }

    /// Position of `v` within `members(partition_of(v))`.
    pub fn local_index(&self, v: VertexId) -> usize {
        self.local_index[v as usize] as usize
    }

    pub fn side(&self, v: VertexId) -> Option<Side> {
        self.sides.as_ref().map(|s| s[v as usize])
    }

    pub fn original_id(&self, v: VertexId) -> u64 {
        self.original_ids[v as usize]
    }

    pub fn boundary_count(&self) -> usize {
        self.class.iter().filter(|&&c| c == VertexClass::Boundary).count()
    }

    /// Number of directed edges whose endpoints lie in different partitions.
    pub fn cut_edges(&self) -> usize {
        self.adjacency.iter().filter(|e| e.remote).count()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v as usize) < self.num_vertices()
    }
}

/// Compacts arbitrary original ids to a dense ascending range.
pub(crate) fn compact_ids(ids: impl IntoIterator<Item = u64>) -> (Vec<u64>, HashMap<u64, VertexId>) {
    let mut sorted: Vec<u64> = ids.into_iter().collect();
    sorted.sort_unstable();
    sorted.dedup();
    let index = sorted.iter().enumerate().map(|(i, &o)| (o, i as VertexId)).collect();
    (sorted, index)
}
