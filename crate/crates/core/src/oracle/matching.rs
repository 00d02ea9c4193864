use std::collections::HashSet;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCheck {
    /// Every pair is an edge of the graph, pointers are mutual, and no
    /// vertex appears twice.
    pub valid: bool,
    /// No edge joins two unmatched vertices.
    pub maximal: bool,
    pub violation: Option<String>,
}

/// Scans a partner assignment for validity and maximality.
pub fn check_matching(graph: &Graph, partner: &[Option<VertexId>]) -> MatchingCheck {
    let mut violation = None;
    let mut note = |msg: String| {
        if violation.is_none() {
            violation = Some(msg);
        }
    };
    let edges: HashSet<(VertexId, VertexId)> = graph
        .edges()
        .iter()
        .flat_map(|e| [(e.source, e.target), (e.target, e.source)])
        .collect();

    let mut valid = partner.len() == graph.num_vertices();
    if !valid {
        note(format!(
            "{} entries for {} vertices",
            partner.len(),
            graph.num_vertices()
        ));
    }
    for (v, p) in partner.iter().enumerate() {
        let v = v as VertexId;
        let Some(p) = *p else { continue };
        if partner.get(p as usize).copied().flatten() != Some(v) {
            valid = false;
            note(format!("{v} -> {p} is not mutual"));
        }
        if !edges.contains(&(v, p)) {
            valid = false;
            note(format!("{v} -> {p} is not an edge"));
        }
        if let Some(sides) = graph.sides() {
            if sides[v as usize] == sides[p as usize] {
                valid = false;
                note(format!("{v} and {p} are on the same side"));
            }
        }
    }

    let unmatched = |v: VertexId| partner.get(v as usize).copied().flatten().is_none();
    let mut maximal = true;
    for e in graph.edges() {
        if e.source != e.target && unmatched(e.source) && unmatched(e.target) {
            maximal = false;
            note(format!("edge {} -> {} has both ends unmatched", e.source, e.target));
            break;
        }
    }
    MatchingCheck {
        valid,
        maximal,
        violation,
    }
}
