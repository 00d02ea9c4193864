use std::sync::atomic::{AtomicU64, Ordering};

use hybrid_bsp::algorithms::{HybridMatching, MatchValue, StandardMatching, Token};
use hybrid_bsp::oracle::check_matching;
use hybrid_bsp::{
    run, Context, EngineConfig, Graph, GraphSpec, Message, Mode, PartitionMap, PartitionedGraph, Side, VertexId,
    VertexProgram,
};

fn partners(values: &[MatchValue]) -> Vec<Option<VertexId>> {
    values.iter().map(MatchValue::partner).collect()
}

fn bipartite(left: usize, right: usize, pairs: &[(VertexId, VertexId)]) -> Graph {
    let both: Vec<_> = pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let sides = (0..left + right)
        .map(|v| if v < left { Side::Left } else { Side::Right })
        .collect();
    Graph::from_pairs(left + right, &both)
        .unwrap()
        .with_sides(sides)
        .unwrap()
}

fn run_both(pg: &PartitionedGraph, seed: u64) -> Vec<(Mode, Vec<MatchValue>, u64)> {
    let standard = StandardMatching::for_graph(pg, seed).unwrap();
    let hybrid = HybridMatching::for_graph(pg, seed).unwrap();
    let mut out = Vec::new();
    let r = run(pg, &standard, &EngineConfig::new(Mode::Standard)).unwrap();
    assert!(r.metrics.converged);
    out.push((Mode::Standard, r.values, r.metrics.global_iterations));
    for mode in [Mode::Standard, Mode::Am, Mode::Hybrid] {
        let r = run(pg, &hybrid, &EngineConfig::new(mode)).unwrap();
        assert!(r.metrics.converged);
        out.push((mode, r.values, r.metrics.global_iterations));
    }
    out
}

#[test]
fn single_edge_is_matched() {
    let g = bipartite(1, 1, &[(0, 1)]);
    let pg = PartitionedGraph::classify(&g, PartitionMap::hash(2, 2).unwrap()).unwrap();
    for (mode, values, _) in run_both(&pg, 1) {
        assert_eq!(partners(&values), vec![Some(1), Some(0)], "{mode}");
    }
}

#[test]
fn two_lefts_compete_for_one_right() {
    let g = bipartite(2, 1, &[(0, 2), (1, 2)]);
    for k in [1, 3] {
        let pg = PartitionedGraph::classify(&g, PartitionMap::hash(3, k).unwrap()).unwrap();
        for (mode, values, _) in run_both(&pg, 9) {
            let p = partners(&values);
            assert_eq!(p.iter().take(2).filter(|x| x.is_some()).count(), 1, "{mode}");
            assert!(check_matching(&g, &p).maximal);
        }
    }
}

#[test]
fn non_bipartite_input_is_rejected() {
    let g = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
    let g = g.with_sides(vec![Side::Left, Side::Right, Side::Right]).unwrap();
    let pg = PartitionedGraph::classify(&g, PartitionMap::hash(3, 1).unwrap()).unwrap();
    assert!(StandardMatching::for_graph(&pg, 0).is_err());
    let untagged = Graph::from_pairs(2, &[(0, 1)]).unwrap();
    let pg = PartitionedGraph::classify(&untagged, PartitionMap::hash(2, 1).unwrap()).unwrap();
    assert!(HybridMatching::for_graph(&pg, 0).is_err());
}

#[test]
fn single_partition_hybrid_finishes_in_first_global_iteration() {
    let g = GraphSpec::RandomBipartite {
        left: 40,
        right: 40,
        p: 0.1,
        seed: 3,
    }
    .generate()
    .unwrap();
    let pg = PartitionedGraph::classify(&g, PartitionMap::hash(80, 1).unwrap()).unwrap();
    let program = HybridMatching::for_graph(&pg, 3).unwrap();
    let out = run(&pg, &program, &EngineConfig::new(Mode::Hybrid)).unwrap();
    assert_eq!(out.metrics.global_iterations, 2);
    let c = check_matching(&g, &partners(&out.values));
    assert!(c.valid && c.maximal);
}

#[test]
fn outputs_are_valid_and_maximal_across_seeds() {
    for seed in 0..50 {
        let g = GraphSpec::RandomBipartite {
            left: 100,
            right: 100,
            p: 0.05,
            seed,
        }
        .generate()
        .unwrap();
        for map in [
            PartitionMap::blocks(200, 8).unwrap(),
            PartitionMap::hash(200, 4).unwrap(),
        ] {
            let pg = PartitionedGraph::classify(&g, map).unwrap();
            for (mode, values, _) in run_both(&pg, seed) {
                let c = check_matching(&g, &partners(&values));
                assert!(c.valid && c.maximal, "{mode} seed {seed}: {:?}", c.violation);
            }
        }
    }
}

/// Counts grants a right vertex sends while its previous grant is still
/// unanswered.
struct GrantAudit {
    inner: HybridMatching,
    violations: AtomicU64,
    grants: AtomicU64,
}

impl VertexProgram for GrantAudit {
    type Value = MatchValue;
    type Message = Token;

    fn initial_value(&self, v: VertexId, g: &PartitionedGraph) -> MatchValue {
        self.inner.initial_value(v, g)
    }

    fn compute(&self, ctx: &mut Context<'_, Token>, value: &mut MatchValue, messages: &[Message<Token>]) {
        let outstanding = value.granted_to();
        let answered = messages
            .iter()
            .any(|m| Some(m.source) == outstanding && matches!(m.payload, Token::Accept | Token::Deny));
        self.inner.compute(ctx, value, messages);
        let sent = ctx.outgoing().iter().filter(|(_, t)| *t == Token::Grant).count() as u64;
        self.grants.fetch_add(sent, Ordering::Relaxed);
        if sent > 1 || (sent == 1 && outstanding.is_some() && !answered) {
            self.violations.fetch_add(1, Ordering::Relaxed);
        }
    }
}

#[test]
fn granted_right_never_grants_again_before_an_answer() {
    for seed in 0..20 {
        let g = GraphSpec::RandomBipartite {
            left: 100,
            right: 100,
            p: 0.05,
            seed,
        }
        .generate()
        .unwrap();
        let pg = PartitionedGraph::classify(&g, PartitionMap::blocks(200, 8).unwrap()).unwrap();
        for mode in [Mode::Am, Mode::Hybrid] {
            let audit = GrantAudit {
                inner: HybridMatching::for_graph(&pg, seed).unwrap(),
                violations: AtomicU64::new(0),
                grants: AtomicU64::new(0),
            };
            run(&pg, &audit, &EngineConfig::new(mode)).unwrap();
            assert!(audit.grants.load(Ordering::Relaxed) > 0);
            assert_eq!(audit.violations.load(Ordering::Relaxed), 0, "{mode} seed {seed}");
        }
    }
}
