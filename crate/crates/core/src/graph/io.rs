use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use super::{compact_ids, Graph, RawEdge, Side, VertexId};
use crate::error::GraphError;

/// Supported text formats.
///
/// * `EdgeList`: `src dst [weight]` per line, `#` comments. Directive lines
///   `#@left ids...`, `#@right ids...` tag bipartite sides and
///   `#@vertices ids...` declares vertices without edges.
/// * `Snap`: the SNAP dataset layout, read with the edge-list rules.
/// * `DimacsGr`: `p sp n m` header, `a u v w` arcs with 1-based ids,
///   `c` comments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    DimacsGr,
    Snap,
}

impl FromStr for GraphFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(Self::EdgeList),
            "dimacs-gr" | "dimacs" | "gr" => Ok(Self::DimacsGr),
            "snap" => Ok(Self::Snap),
            other => Err(GraphError::Config(format!("unknown graph format `{other}`"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::EdgeList => "edgelist",
            Self::DimacsGr => "dimacs-gr",
            Self::Snap => "snap",
        })
    }
}

pub fn load_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<Graph, GraphError> {
    let file = File::open(path)?;
    parse_graph(BufReader::new(file), format)
}

pub fn parse_graph(reader: impl BufRead, format: GraphFormat) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::EdgeList | GraphFormat::Snap => parse_edge_list(reader),
        GraphFormat::DimacsGr => parse_dimacs(reader),
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_ids<'a>(line: usize, fields: impl Iterator<Item = &'a str>) -> Result<Vec<u64>, GraphError> {
    fields
        .map(|f| {
            f.parse::<u64>()
                .map_err(|_| parse_err(line, format!("bad vertex id `{f}`")))
        })
        .collect()
}

fn parse_edge_list(reader: impl BufRead) -> Result<Graph, GraphError> {
    let mut raw: Vec<(u64, u64, f64, usize)> = Vec::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut declared = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(directive) = line.strip_prefix("#@") {
            let mut fields = directive.split_whitespace();
            match fields.next() {
                Some("left") => left.extend(parse_ids(lineno, fields)?),
                Some("right") => right.extend(parse_ids(lineno, fields)?),
                Some("vertices") => declared.extend(parse_ids(lineno, fields)?),
                _ => {}
            }
            continue;
        }
        if line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(parse_err(lineno, "expected `src dst [weight]`"));
        }
        let ids = parse_ids(lineno, fields[..2].iter().copied())?;
        let weight = match fields.get(2) {
            Some(w) => w
                .parse::<f64>()
                .map_err(|_| parse_err(lineno, format!("bad weight `{w}`")))?,
            None => 1.0,
        };
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(parse_err(
                lineno,
                format!("weight {weight} must be finite and non-negative"),
            ));
        }
        raw.push((ids[0], ids[1], weight, lineno));
    }

    let all_ids = raw
        .iter()
        .flat_map(|&(s, t, _, _)| [s, t])
        .chain(left.iter().copied())
        .chain(right.iter().copied())
        .chain(declared.iter().copied());
    let (original_ids, index) = compact_ids(all_ids);
    let edges = raw
        .iter()
        .map(|&(s, t, weight, _)| RawEdge {
            source: index[&s],
            target: index[&t],
            weight,
        })
        .collect();
    let graph = Graph::with_original_ids(original_ids, edges)?;

    if left.is_empty() && right.is_empty() {
        return Ok(graph);
    }
    // Vertices tagged on neither side default to the side not listed.
    let default = if right.is_empty() { Side::Right } else { Side::Left };
    let mut sides = vec![default; graph.num_vertices()];
    for o in &left {
        sides[index[o] as usize] = Side::Left;
    }
    for o in &right {
        if !left.is_empty() && left.contains(o) {
            return Err(GraphError::Config(format!("vertex {o} tagged both left and right")));
        }
        sides[index[o] as usize] = Side::Right;
    }
    graph.with_sides(sides)
}

fn parse_dimacs(reader: impl BufRead) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let mut fields = line.split_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                let rest: Vec<&str> = fields.collect();
                if rest.len() != 3 {
                    return Err(parse_err(lineno, "expected `p sp n m`"));
                }
                let n = rest[1].parse().map_err(|_| parse_err(lineno, "bad vertex count"))?;
                let m = rest[2].parse().map_err(|_| parse_err(lineno, "bad arc count"))?;
                header = Some((n, m));
            }
            Some("a") => {
                let (n, _) = header.ok_or_else(|| parse_err(lineno, "arc before `p` header"))?;
                let rest: Vec<&str> = fields.collect();
                if rest.len() != 3 {
                    return Err(parse_err(lineno, "expected `a u v w`"));
                }
                let ids = parse_ids(lineno, rest[..2].iter().copied())?;
                for &id in &ids {
                    if id == 0 || id as usize > n {
                        return Err(parse_err(lineno, format!("vertex {id} outside 1..={n}")));
                    }
                }
                let weight: f64 = rest[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad weight `{}`", rest[2])))?;
                if !(weight.is_finite() && weight >= 0.0) {
                    return Err(parse_err(
                        lineno,
                        format!("weight {weight} must be finite and non-negative"),
                    ));
                }
                edges.push(RawEdge {
                    source: (ids[0] - 1) as VertexId,
                    target: (ids[1] - 1) as VertexId,
                    weight,
                });
            }
            Some(other) => return Err(parse_err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p sp n m` header"))?;
    if edges.len() != m {
        return Err(GraphError::Config(format!(
            "header announces {m} arcs, file contains {}",
            edges.len()
        )));
    }
    Graph::with_original_ids((1..=n as u64).collect(), edges)
}

/// Writes `graph` in edge-list format using original ids.
pub fn write_edge_list(graph: &Graph, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "# {} vertices, {} edges", graph.num_vertices(), graph.num_edges())?;
    let mut touched = vec![false; graph.num_vertices()];
    for e in graph.edges() {
        touched[e.source as usize] = true;
        touched[e.target as usize] = true;
    }
    if let Some(sides) = graph.sides() {
        for (tag, side) in [("left", Side::Left), ("right", Side::Right)] {
            let ids: Vec<String> = (0..graph.num_vertices())
                .filter(|&v| sides[v] == side)
                .map(|v| graph.original_id(v as VertexId).to_string())
                .collect();
            if !ids.is_empty() {
                writeln!(out, "#@{tag} {}", ids.join(" "))?;
            }
        }
    } else {
        let isolated: Vec<String> = (0..graph.num_vertices())
            .filter(|&v| !touched[v])
            .map(|v| graph.original_id(v as VertexId).to_string())
            .collect();
        if !isolated.is_empty() {
            writeln!(out, "#@vertices {}", isolated.join(" "))?;
        }
    }
    for e in graph.edges() {
        writeln!(
            out,
            "{} {} {}",
            graph.original_id(e.source),
            graph.original_id(e.target),
            e.weight
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
        parse_graph(text.as_bytes(), format)
    }

    #[test]
    fn minimal_edge_list() {
        let g = parse("0 1\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 2);
    }

    #[test]
    fn ids_are_compacted_and_kept() {
        let g = parse("# comment\n10 30 2.5\n30 10\n30 30\n30 30\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.original_ids(), &[10, 30]);
        assert_eq!(
            g.edges()[0],
            RawEdge {
                source: 0,
                target: 1,
                weight: 2.5
            }
        );
        // duplicates and self-loops survive
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.vertex_by_original(30), Some(1));
    }

    #[test]
    fn dimacs_arc() {
        let g = parse("c road\np sp 2 1\na 1 2 5\n", GraphFormat::DimacsGr).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(
            g.edges(),
            &[RawEdge {
                source: 0,
                target: 1,
                weight: 5.0
            }]
        );
        assert_eq!(g.original_id(0), 1);
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(
            parse("a 1 2 5\n", GraphFormat::DimacsGr),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("p sp 2 1\na 1 3 5\n", GraphFormat::DimacsGr),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(parse("p sp 2 2\na 1 2 5\n", GraphFormat::DimacsGr).is_err());
    }

    #[test]
    fn parse_error_names_line() {
        let err = parse("0 1\n1 x\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("line 2"));
        assert!(matches!(
            parse("0 1 -3\n", GraphFormat::EdgeList),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn unknown_format_is_config_error() {
        assert!(matches!("metis".parse::<GraphFormat>(), Err(GraphError::Config(_))));
    }

    #[test]
    fn side_directives() {
        let g = parse("#@left 1 2\n1 5\n5 1\n2 6\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.sides().unwrap(), &[Side::Left, Side::Left, Side::Right, Side::Right]);
        g.validate_bipartite().unwrap();
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(
            edges in prop::collection::vec((0u64..40, 0u64..40, 0u32..1000), 0..80),
            extra in prop::collection::vec(40u64..60, 0..4),
        ) {
            let mut text = String::new();
            if !extra.is_empty() {
                let ids: Vec<String> = extra.iter().map(u64::to_string).collect();
                text.push_str(&format!("#@vertices {}\n", ids.join(" ")));
            }
            for (s, t, w) in &edges {
                text.push_str(&format!("{s} {t} {}\n", *w as f64 / 8.0));
            }
            let g = parse(&text, GraphFormat::EdgeList).unwrap();
            let mut buf = Vec::new();
            write_edge_list(&g, &mut buf).unwrap();
            let again = parse_graph(buf.as_slice(), GraphFormat::EdgeList).unwrap();
            prop_assert_eq!(&g, &again);
        }
    }
}
