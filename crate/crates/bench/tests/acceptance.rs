//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use hybrid_bsp::algorithms::{HybridMatching, IncrementalPageRank, MatchValue, Sssp, StandardMatching};
use hybrid_bsp::oracle::{check_matching, dijkstra, power_iteration, RankConvention};
use hybrid_bsp::{
    run, Context, EngineConfig, Graph, GraphSpec, Message, Mode, PartitionMap, PartitionedGraph, RunMetrics,
    RunOutcome, TerminationReport, VertexId, VertexProgram,
};
use hybrid_bsp_bench::run_suite_text;

const MODES: [Mode; 3] = [Mode::Standard, Mode::Am, Mode::Hybrid];

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Verdict);

/// Every hybrid run made by the suite, checked by the locality criterion.
static HYBRID_RUNS: Mutex<Vec<(String, RunMetrics)>> = Mutex::new(Vec::new());

fn exec<P: VertexProgram>(
    label: &str,
    pg: &PartitionedGraph,
    program: &P,
    config: &EngineConfig,
) -> RunOutcome<P::Value> {
    let out = run(pg, program, config).expect("engine run");
    if config.mode == Mode::Hybrid {
        HYBRID_RUNS
            .lock()
            .unwrap()
            .push((label.to_string(), out.metrics.clone()));
    }
    out
}

fn cfg(mode: Mode) -> EngineConfig {
    EngineConfig::new(mode)
}

fn classify(g: &Graph, map: PartitionMap) -> PartitionedGraph {
    PartitionedGraph::classify(g, map).expect("partition")
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sssp_oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let mut runs = 0;
    for seed in 0..100u64 {
        let n = 50 + (seed as usize * 37) % 151;
        let g = GraphSpec::Random {
            n,
            p: 4.0 / n as f64,
            max_weight: 20,
            seed,
        }
        .generate()
        .unwrap();
        let expected = dijkstra(&g, 0).unwrap();
        for k in [1, 2, 4, 8] {
            for map in [PartitionMap::hash(n, k).unwrap(), PartitionMap::blocks(n, k).unwrap()] {
                let pg = classify(&g, map);
                for mode in MODES {
                    let out = exec("sssp-random", &pg, &Sssp::new(0), &cfg(mode));
                    runs += 1;
                    check(out.metrics.converged && out.values == expected, || {
                        format!("seed {seed} n={n} k={k} {mode}: distances differ from Dijkstra")
                    })?;
                }
            }
        }
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(60), || format!("took {t:.1?}, limit 60 s"))?;
    Ok(format!("{runs} runs equal Dijkstra in {t:.1?}"))
}

fn grid_runs() -> Vec<(Mode, RunMetrics)> {
    let g = GraphSpec::Grid { width: 64, height: 64 }.generate().unwrap();
    let pg = classify(&g, PartitionMap::blocks(4096, 8).unwrap());
    let expected = dijkstra(&g, 0).unwrap();
    MODES
        .iter()
        .map(|&mode| {
            let out = exec("sssp-grid", &pg, &Sssp::new(0), &cfg(mode));
            assert_eq!(out.values, expected);
            (mode, out.metrics)
        })
        .collect()
}

fn sssp_iteration_trend() -> Verdict {
    let start = Instant::now();
    let runs = grid_runs();
    let t = start.elapsed();
    let i = |m: Mode| runs.iter().find(|r| r.0 == m).unwrap().1.global_iterations;
    let (s, a, h) = (i(Mode::Standard), i(Mode::Am), i(Mode::Hybrid));
    let detail = format!("I standard={s} am={a} hybrid={h}, {t:.1?}");
    check(5 * h <= s, || format!("hybrid not ≤ standard/5: {detail}"))?;
    check(h <= a, || format!("hybrid above am: {detail}"))?;
    check(t < Duration::from_secs(10), || format!("too slow: {detail}"))?;
    Ok(detail)
}

fn message_ordering() -> Verdict {
    let runs = grid_runs();
    let m = |mode: Mode| runs.iter().find(|r| r.0 == mode).unwrap().1.remote_messages;
    let (s, a, h) = (m(Mode::Standard), m(Mode::Am), m(Mode::Hybrid));
    let detail = format!("M standard={s} am={a} hybrid={h}");
    check(h <= a && a <= s, || format!("ordering violated: {detail}"))?;
    Ok(detail)
}

fn pagerank_accuracy() -> Verdict {
    let mut worst: f64 = 0.0;
    for seed in 0..20 {
        let g = GraphSpec::PowerLaw {
            n: 1000 + 50 * seed as usize,
            m: 3,
            seed,
        }
        .generate()
        .unwrap();
        let oracle = power_iteration(&g, RankConvention::Unnormalized, 10_000);
        let pg = classify(&g, PartitionMap::blocks(g.num_vertices(), 8).unwrap());
        for mode in MODES {
            let out = exec(
                "pagerank-accuracy",
                &pg,
                &IncrementalPageRank::new(1e-8).unwrap(),
                &cfg(mode),
            );
            let err = out
                .values
                .iter()
                .zip(&oracle)
                .map(|(a, b)| (a - b).abs() / b)
                .fold(0.0, f64::max);
            worst = worst.max(err);
            check(err <= 1e-4, || format!("seed {seed} {mode}: relative error {err:e}"))?;
        }
    }
    Ok(format!("max relative error {worst:.2e} over 20 graphs × 3 engines"))
}

fn pagerank_trend() -> Verdict {
    let g = GraphSpec::PowerLaw { n: 5000, m: 3, seed: 0 }.generate().unwrap();
    let pg = classify(&g, PartitionMap::blocks(5000, 8).unwrap());
    let mut gaps = Vec::new();
    let mut detail = Vec::new();
    for delta in [1e-2, 1e-3, 1e-4] {
        let program = IncrementalPageRank::new(delta).unwrap();
        let s = exec("pagerank-trend", &pg, &program, &cfg(Mode::Standard))
            .metrics
            .global_iterations;
        let h = exec("pagerank-trend", &pg, &program, &cfg(Mode::Hybrid))
            .metrics
            .global_iterations;
        detail.push(format!("Δ={delta:e}: {s}/{h}"));
        check(h < s, || {
            format!("hybrid not below standard at Δ={delta:e}: {s} vs {h}")
        })?;
        gaps.push(s - h);
    }
    check(gaps.windows(2).all(|w| w[0] <= w[1]), || {
        format!("gap shrinks: {gaps:?}")
    })?;
    Ok(format!("I standard/hybrid {}; gaps {gaps:?}", detail.join(", ")))
}

fn matching_quality() -> Verdict {
    let mut wins = 0;
    let (mut sum_s, mut sum_h) = (0, 0);
    for seed in 0..50 {
        let g = GraphSpec::RandomBipartite {
            left: 100,
            right: 100,
            p: 0.05,
            seed,
        }
        .generate()
        .unwrap();
        let pg = classify(&g, PartitionMap::blocks(200, 8).unwrap());
        let s = exec(
            "bm",
            &pg,
            &StandardMatching::for_graph(&pg, seed).unwrap(),
            &cfg(Mode::Standard),
        );
        let h = exec(
            "bm",
            &pg,
            &HybridMatching::for_graph(&pg, seed).unwrap(),
            &cfg(Mode::Hybrid),
        );
        for (name, out) in [("standard", &s), ("hybrid", &h)] {
            let partners: Vec<_> = out.values.iter().map(MatchValue::partner).collect();
            let c = check_matching(&g, &partners);
            check(out.metrics.converged && c.valid && c.maximal, || {
                format!("seed {seed} {name}: {:?}", c.violation)
            })?;
        }
        let (is, ih) = (s.metrics.global_iterations, h.metrics.global_iterations);
        sum_s += is;
        sum_h += ih;
        if ih <= is {
            wins += 1;
        }
    }
    let detail = format!(
        "all valid and maximal; I(hybrid) ≤ I(standard) in {wins}/50 seeds (mean {:.2} vs {:.2})",
        sum_h as f64 / 50.0,
        sum_s as f64 / 50.0
    );
    check(wins >= 45, || detail.clone())?;
    Ok(detail)
}

const SUITE: &str = "\
--algo sssp --engine {standard,am,hybrid} --gen grid:32x32 --k {2,4,8,16} --part blocks --source 0 --seed 1
--algo sssp --engine {standard,am,hybrid} --gen random:150:0.03:20 --k 4 --part hash --source 0 --seed {1,2}
--algo pagerank-inc --engine {standard,am,hybrid} --gen powerlaw:800:3 --k 4 --part blocks --delta {1e-3,1e-5} --seed 3
--algo pagerank-plain --engine {standard,hybrid} --gen powerlaw:300:2 --k 2 --budget 20 --seed 4
--algo bm --engine {standard,am,hybrid} --gen bipartite:60x60:0.08 --k {2,8} --part blocks --seed {5,6}
";

fn strip_time(csv: &str) -> String {
    csv.lines()
        .map(|l| {
            let mut f: Vec<&str> = l.split(',').collect();
            f.remove(8);
            f.join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn determinism() -> Verdict {
    let a = run_suite_text(SUITE);
    let b = run_suite_text(SUITE);
    check(a.failures.is_empty(), || format!("suite failures: {:?}", a.failures))?;
    for r in a.results.iter().chain(&b.results) {
        if r.manifest.engine == Mode::Hybrid {
            HYBRID_RUNS.lock().unwrap().push(("suite".into(), r.metrics.clone()));
        }
    }
    let (ca, cb) = (strip_time(&a.csv()), strip_time(&b.csv()));
    check(ca == cb, || "CSV differs between identical suite runs".into())?;
    let sssp: Vec<_> = a
        .results
        .iter()
        .filter(|r| r.manifest.canonical().contains("grid:32x32"))
        .collect();
    check(sssp.windows(2).all(|w| w[0].checksum == w[1].checksum), || {
        "SSSP checksum differs across engines".into()
    })?;
    Ok(format!(
        "{} rows reproduced byte-for-byte (time column excluded)",
        a.results.len()
    ))
}

fn combiner_soundness() -> Verdict {
    let mut workloads = Vec::new();
    let grid = GraphSpec::Grid { width: 64, height: 64 }.generate().unwrap();
    for k in [2, 4, 8, 16] {
        workloads.push((
            format!("grid k={k}"),
            classify(&grid, PartitionMap::blocks(4096, k).unwrap()),
        ));
    }
    for seed in 0..20 {
        let g = GraphSpec::Random {
            n: 200,
            p: 0.03,
            max_weight: 20,
            seed,
        }
        .generate()
        .unwrap();
        workloads.push((
            format!("random seed {seed}"),
            classify(&g, PartitionMap::hash(200, 4).unwrap()),
        ));
    }
    let mut runs = 0;
    let mut saved = 0;
    for (name, pg) in &workloads {
        for mode in MODES {
            let mut off = cfg(mode);
            off.combiner_enabled = false;
            let with = exec("combiner", pg, &Sssp::new(0), &cfg(mode));
            let without = exec("combiner", pg, &Sssp::new(0), &off);
            runs += 1;
            check(with.values == without.values, || {
                format!("{name} {mode}: distances differ")
            })?;
            check(with.metrics.remote_messages <= without.metrics.remote_messages, || {
                format!(
                    "{name} {mode}: M with {} > without {}",
                    with.metrics.remote_messages, without.metrics.remote_messages
                )
            })?;
            saved += without.metrics.remote_messages - with.metrics.remote_messages;
        }
    }
    Ok(format!(
        "{runs} run pairs identical; combiner saved {saved} remote messages"
    ))
}

/// Sends once in superstep 0, then only counts arrivals.
struct SendOnce;

impl VertexProgram for SendOnce {
    type Value = usize;
    type Message = ();

    fn initial_value(&self, _: VertexId, _: &PartitionedGraph) -> usize {
        0
    }

    fn compute(&self, ctx: &mut Context<'_, ()>, value: &mut usize, messages: &[Message<()>]) {
        if ctx.superstep() == 0 {
            ctx.send_to_neighbors(());
        }
        *value += messages.len();
        ctx.vote_to_halt();
    }
}

fn termination_protocol() -> Verdict {
    let in_transit = TerminationReport {
        active_vertices: 0,
        in_transit: 2,
        max_partition_active: 0,
    };
    let quiet = TerminationReport {
        active_vertices: 0,
        in_transit: 0,
        max_partition_active: 0,
    };
    check(!in_transit.is_terminated(), || {
        "(a) terminated with messages in transit".into()
    })?;
    check(quiet.is_terminated(), || "(b) did not terminate when quiescent".into())?;

    // (a) on a live engine: every vertex halts in superstep 0 with messages
    // still in flight; the run must continue and deliver them.
    let g = Graph::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
    let isolated = Graph::from_pairs(2, &[]).unwrap();
    for mode in MODES {
        let pg = classify(&g, PartitionMap::hash(2, 2).unwrap());
        let out = exec("termination", &pg, &SendOnce, &cfg(mode));
        check(out.metrics.global_iterations == 2 && out.values == vec![1, 1], || {
            format!(
                "(a) {mode}: I={} values {:?}",
                out.metrics.global_iterations, out.values
            )
        })?;
        let pg = classify(&isolated, PartitionMap::hash(2, 2).unwrap());
        let out = exec("termination", &pg, &SendOnce, &cfg(mode));
        check(out.metrics.global_iterations == 1 && out.metrics.converged, || {
            format!("(b) {mode}: I={}", out.metrics.global_iterations)
        })?;
    }
    Ok("fixtures (a) continue and (b) stop on every engine".into())
}

fn hybrid_locality() -> Verdict {
    let runs = HYBRID_RUNS.lock().unwrap();
    check(!runs.is_empty(), || "no hybrid runs recorded".into())?;
    let mut pseudo = 0;
    for (label, m) in runs.iter() {
        check(m.local_phase_deliveries == 0, || {
            format!("{label}: {} deliveries inside a local phase", m.local_phase_deliveries)
        })?;
        check(m.barrier_deliveries == m.global_iterations, || {
            format!(
                "{label}: {} deliveries for {} iterations",
                m.barrier_deliveries, m.global_iterations
            )
        })?;
        pseudo += m.pseudo_supersteps;
    }
    Ok(format!(
        "{} hybrid runs, {pseudo} pseudo-supersteps, one delivery per global iteration, none inside local phases",
        runs.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "SSSP oracle equivalence", sssp_oracle_equivalence),
        (2, "SSSP iteration-reduction trend", sssp_iteration_trend),
        (3, "message-count ordering", message_ordering),
        (4, "incremental PageRank accuracy", pagerank_accuracy),
        (5, "PageRank convergence trend", pagerank_trend),
        (7, "bipartite matching", matching_quality),
        (8, "determinism", determinism),
        (9, "combiner soundness", combiner_soundness),
        (10, "termination protocol", termination_protocol),
        // runs last: it audits every hybrid run made above
        (6, "hybrid locality", hybrid_locality),
    ];
    let mut lines = Vec::new();
    for (id, name, f) in criteria {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        let line = match &verdict {
            Ok(d) => format!("PASS [{id:>2}] {name} ({secs:.2}s): {d}"),
            Err(d) => format!("FAIL [{id:>2}] {name} ({secs:.2}s): {d}"),
        };
        println!("{line}");
        lines.push((id, verdict.is_ok()));
    }
    let failed: Vec<_> = lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", lines.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
