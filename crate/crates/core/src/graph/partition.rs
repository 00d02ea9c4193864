use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::{Graph, VertexId};
use crate::error::GraphError;

/// Total assignment of vertices to partitions `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMap {
    assignment: Vec<u32>,
    k: usize,
}

impl PartitionMap {
    pub fn new(assignment: Vec<u32>, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::Config("partition count must be at least 1".into()));
        }
        if let Some((v, &p)) = assignment.iter().enumerate().find(|(_, &p)| p as usize >= k) {
            return Err(GraphError::PartitionOutOfRange {
                vertex: v as u64,
                partition: p as usize,
                k,
            });
        }
        Ok(Self { assignment, k })
    }

    /// `partition(v) = v mod k`.
    pub fn hash(num_vertices: usize, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::Config("partition count must be at least 1".into()));
        }
        Self::new((0..num_vertices).map(|v| (v % k) as u32).collect(), k)
    }

    /// Contiguous id ranges of near-equal size: `partition(v) = v·k / n`.
    pub fn blocks(num_vertices: usize, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::Config("partition count must be at least 1".into()));
        }
        let n = num_vertices.max(1);
        Self::new((0..num_vertices).map(|v| (v * k / n) as u32).collect(), k)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn partition_of(&self, v: VertexId) -> usize {
        self.assignment[v as usize] as usize
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }
}

pub fn load_partition_map(path: impl AsRef<Path>, graph: &Graph, k: usize) -> Result<PartitionMap, GraphError> {
    parse_partition_map(BufReader::new(File::open(path)?), graph, k)
}

/// Reads `vertexId partitionId` lines keyed by original vertex id.
pub fn parse_partition_map(reader: impl BufRead, graph: &Graph, k: usize) -> Result<PartitionMap, GraphError> {
    if k == 0 {
        return Err(GraphError::Config("partition count must be at least 1".into()));
    }
    let mut assignment: Vec<Option<u32>> = vec![None; graph.num_vertices()];
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [v, p] => v.parse::<u64>().ok().zip(p.parse::<usize>().ok()),
            _ => None,
        };
        let (original, partition) = parsed.ok_or_else(|| GraphError::Parse {
            line: lineno,
            reason: "expected `vertexId partitionId`".into(),
        })?;
        if partition >= k {
            return Err(GraphError::PartitionOutOfRange {
                vertex: original,
                partition,
                k,
            });
        }
        let v = graph.vertex_by_original(original).ok_or_else(|| GraphError::Parse {
            line: lineno,
            reason: format!("vertex {original} is not in the graph"),
        })?;
        assignment[v as usize] = Some(partition as u32);
    }
    let assignment = assignment
        .iter()
        .enumerate()
        .map(|(v, p)| p.ok_or(GraphError::MissingVertex(graph.original_id(v as VertexId))))
        .collect::<Result<Vec<_>, _>>()?;
    PartitionMap::new(assignment, k)
}

pub fn write_partition_map(map: &PartitionMap, graph: &Graph, mut out: impl Write) -> std::io::Result<()> {
    for v in 0..map.len() {
        writeln!(out, "{} {}", graph.original_id(v as VertexId), map.assignment[v])?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    #[test]
    fn hash_is_modulo() {
        let m = PartitionMap::hash(10, 3).unwrap();
        assert_eq!(m.partition_of(7), 1);
        let one = PartitionMap::hash(10, 1).unwrap();
        assert!((0..10).all(|v| one.partition_of(v) == 0));
        assert!(PartitionMap::hash(10, 0).is_err());
    }

    #[test]
    fn blocks_are_contiguous_and_balanced() {
        let m = PartitionMap::blocks(4096, 8).unwrap();
        for v in 0..4096u32 {
            assert_eq!(m.partition_of(v), v as usize / 512);
        }
        let m = PartitionMap::blocks(10, 3).unwrap();
        assert_eq!(m.assignment(), &[0, 0, 0, 0, 1, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn parse_file_map() {
        let g = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        let m = parse_partition_map("0 0\n1 1\n".as_bytes(), &g, 2).unwrap();
        assert_eq!(m.assignment(), &[0, 1]);
    }

    #[test]
    fn missing_vertex_is_an_error() {
        let g = Graph::from_pairs(3, &[(0, 1)]).unwrap();
        let err = parse_partition_map("0 0\n1 1\n".as_bytes(), &g, 2).unwrap_err();
        assert!(matches!(err, GraphError::MissingVertex(2)));
    }

    #[test]
    fn out_of_range_partition_is_an_error() {
        let g = Graph::from_pairs(2, &[(0, 1)]).unwrap();
        let err = parse_partition_map("0 0\n1 5\n".as_bytes(), &g, 2).unwrap_err();
        assert!(matches!(err, GraphError::PartitionOutOfRange { partition: 5, .. }));
    }

    #[test]
    fn write_then_parse() {
        let g = GraphSpec::Grid { width: 5, height: 5 }.generate().unwrap();
        let m = PartitionMap::blocks(25, 4).unwrap();
        let mut buf = Vec::new();
        write_partition_map(&m, &g, &mut buf).unwrap();
        assert_eq!(parse_partition_map(buf.as_slice(), &g, 4).unwrap(), m);
    }
}
