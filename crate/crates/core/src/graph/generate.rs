use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, RawEdge, Side, VertexId};
use crate::error::GraphError;

/// Synthetic graph families used for desk-scale experiments.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    /// `width × height` lattice, row-major ids, unit-weight edges in both
    /// directions between horizontal and vertical neighbours.
    Grid { width: usize, height: usize },
    /// Left vertices `0..left`, right vertices `left..left+right`. Each
    /// left/right pair is joined with probability `p`, in both directions.
    RandomBipartite {
        left: usize,
        right: usize,
        p: f64,
        seed: u64,
    },
    /// Preferential attachment: vertices `0..=m` form a directed ring, then
    /// each new vertex links to `m` distinct existing vertices picked with
    /// probability proportional to degree. Each such edge is reciprocated
    /// with probability one half.
    PowerLaw { n: usize, m: usize, seed: u64 },
    /// Directed G(n, p) with integer weights drawn uniformly from
    /// `1..=max_weight`.
    Random {
        n: usize,
        p: f64,
        max_weight: u32,
        seed: u64,
    },
}

impl GraphSpec {
    /// Parses `grid:WxH`, `bipartite:LxR:P`, `powerlaw:N:M` or
    /// `random:N:P[:MAXW]`; `seed` feeds the randomized families.
    pub fn parse(s: &str, seed: u64) -> Result<Self, GraphError> {
        let bad = || GraphError::Config(format!("cannot parse generator spec `{s}`"));
        let parts: Vec<&str> = s.split(':').collect();
        let dims = |d: &str| -> Result<(usize, usize), GraphError> {
            let (a, b) = d.split_once('x').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        };
        let spec = match parts.as_slice() {
            ["grid", d] => {
                let (width, height) = dims(d)?;
                Self::Grid { width, height }
            }
            ["bipartite", d, p] => {
                let (left, right) = dims(d)?;
                Self::RandomBipartite {
                    left,
                    right,
                    p: p.parse().map_err(|_| bad())?,
                    seed,
                }
            }
            ["powerlaw", n, m] => Self::PowerLaw {
                n: n.parse().map_err(|_| bad())?,
                m: m.parse().map_err(|_| bad())?,
                seed,
            },
            ["random", n, p] | ["random", n, p, _] => Self::Random {
                n: n.parse().map_err(|_| bad())?,
                p: p.parse().map_err(|_| bad())?,
                max_weight: match parts.get(3) {
                    Some(w) => w.parse().map_err(|_| bad())?,
                    None => 10,
                },
                seed,
            },
            _ => return Err(bad()),
        };
        Ok(spec)
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        match *self {
            Self::Grid { width, height } => grid(width, height),
            Self::RandomBipartite { left, right, p, seed } => random_bipartite(left, right, p, seed),
            Self::PowerLaw { n, m, seed } => power_law(n, m, seed),
            Self::Random { n, p, max_weight, seed } => random(n, p, max_weight, seed),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Grid { width, height } => write!(f, "grid:{width}x{height}"),
            Self::RandomBipartite { left, right, p, .. } => write!(f, "bipartite:{left}x{right}:{p}"),
            Self::PowerLaw { n, m, .. } => write!(f, "powerlaw:{n}:{m}"),
            Self::Random { n, p, max_weight, .. } => write!(f, "random:{n}:{p}:{max_weight}"),
        }
    }
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::Config(format!("probability {p} outside [0, 1]")))
    }
}

fn unit(source: usize, target: usize) -> RawEdge {
    RawEdge {
        source: source as VertexId,
        target: target as VertexId,
        weight: 1.0,
    }
}

fn grid(width: usize, height: usize) -> Result<Graph, GraphError> {
    if width == 0 || height == 0 {
        return Err(GraphError::Config("grid dimensions must be positive".into()));
    }
    let id = |r: usize, c: usize| r * width + c;
    let mut edges = Vec::with_capacity(2 * (2 * width * height - width - height));
    for r in 0..height {
        for c in 0..width {
            if c + 1 < width {
                edges.push(unit(id(r, c), id(r, c + 1)));
                edges.push(unit(id(r, c + 1), id(r, c)));
            }
            if r + 1 < height {
                edges.push(unit(id(r, c), id(r + 1, c)));
                edges.push(unit(id(r + 1, c), id(r, c)));
            }
        }
    }
    Graph::new(width * height, edges)
}

fn random_bipartite(left: usize, right: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if left == 0 || right == 0 {
        return Err(GraphError::Config("bipartite sides must be non-empty".into()));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for l in 0..left {
        for r in left..left + right {
            if rng.random_bool(p) {
                edges.push(unit(l, r));
                edges.push(unit(r, l));
            }
        }
    }
    let sides = (0..left + right)
        .map(|v| if v < left { Side::Left } else { Side::Right })
        .collect();
    Graph::new(left + right, edges)?.with_sides(sides)
}

fn power_law(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 || m == 0 {
        return Err(GraphError::Config("power-law graph needs n > 0 and m > 0".into()));
    }
    if n <= m {
        return Err(GraphError::Config(format!(
            "power-law graph needs n > m (n={n}, m={m})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    // every edge endpoint, so uniform sampling is degree-proportional
    let mut endpoints: Vec<usize> = Vec::new();
    let ring = m + 1;
    for v in 0..ring {
        let t = (v + 1) % ring;
        if t != v {
            edges.push(unit(v, t));
            endpoints.extend([v, t]);
        }
    }
    if endpoints.is_empty() {
        endpoints.push(0);
    }
    let mut chosen = Vec::with_capacity(m);
    for v in ring..n {
        chosen.clear();
        while chosen.len() < m {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push(unit(v, t));
            endpoints.extend([v, t]);
            if rng.random_bool(0.5) {
                edges.push(unit(t, v));
                endpoints.extend([t, v]);
            }
        }
    }
    Graph::new(n, edges)
}

fn random(n: usize, p: f64, max_weight: u32, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 || max_weight == 0 {
        return Err(GraphError::Config("random graph needs n > 0 and max_weight > 0".into()));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t && rng.random_bool(p) {
                edges.push(RawEdge {
                    source: s as VertexId,
                    target: t as VertexId,
                    weight: rng.random_range(1..=max_weight) as f64,
                });
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid() {
        let g = GraphSpec::Grid { width: 2, height: 2 }.generate().unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 8);
    }

    #[test]
    fn grid_edge_count_formula() {
        for (w, h) in [(64, 64), (1, 5), (3, 7)] {
            let g = GraphSpec::Grid { width: w, height: h }.generate().unwrap();
            assert_eq!(g.num_vertices(), w * h);
            assert_eq!(g.num_edges(), 2 * (2 * w * h - w - h));
        }
    }

    #[test]
    fn complete_bipartite_at_p_one() {
        let g = GraphSpec::RandomBipartite {
            left: 3,
            right: 3,
            p: 1.0,
            seed: 9,
        }
        .generate()
        .unwrap();
        assert_eq!(g.num_edges(), 18);
        g.validate_bipartite().unwrap();
    }

    #[test]
    fn zero_sizes_are_rejected() {
        assert!(GraphSpec::Grid { width: 0, height: 3 }.generate().is_err());
        assert!(GraphSpec::RandomBipartite {
            left: 0,
            right: 3,
            p: 0.5,
            seed: 1
        }
        .generate()
        .is_err());
        assert!(GraphSpec::RandomBipartite {
            left: 2,
            right: 3,
            p: 1.5,
            seed: 1
        }
        .generate()
        .is_err());
        assert!(GraphSpec::PowerLaw { n: 0, m: 2, seed: 1 }.generate().is_err());
    }

    #[test]
    fn generators_are_deterministic() {
        for spec in [
            GraphSpec::RandomBipartite {
                left: 20,
                right: 30,
                p: 0.1,
                seed: 4,
            },
            GraphSpec::PowerLaw { n: 300, m: 3, seed: 4 },
            GraphSpec::Random {
                n: 50,
                p: 0.1,
                max_weight: 9,
                seed: 4,
            },
        ] {
            assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
        }
        let a = GraphSpec::PowerLaw { n: 300, m: 3, seed: 4 }.generate().unwrap();
        let b = GraphSpec::PowerLaw { n: 300, m: 3, seed: 5 }.generate().unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn power_law_has_heavy_tail() {
        let g = GraphSpec::PowerLaw { n: 2000, m: 3, seed: 1 }.generate().unwrap();
        let mut indeg = vec![0usize; 2000];
        for e in g.edges() {
            indeg[e.target as usize] += 1;
        }
        let max = *indeg.iter().max().unwrap();
        let mean = g.num_edges() as f64 / 2000.0;
        assert!(max as f64 > 10.0 * mean, "max {max}, mean {mean}");
    }

    #[test]
    fn parse_specs() {
        assert_eq!(
            GraphSpec::parse("grid:64x32", 0).unwrap(),
            GraphSpec::Grid { width: 64, height: 32 }
        );
        assert_eq!(
            GraphSpec::parse("bipartite:100x90:0.05", 3).unwrap(),
            GraphSpec::RandomBipartite {
                left: 100,
                right: 90,
                p: 0.05,
                seed: 3
            }
        );
        assert_eq!(
            GraphSpec::parse("random:200:0.03", 1).unwrap(),
            GraphSpec::Random {
                n: 200,
                p: 0.03,
                max_weight: 10,
                seed: 1
            }
        );
        assert!(GraphSpec::parse("grid:64", 0).is_err());
        let s = GraphSpec::parse("powerlaw:5000:3", 2).unwrap();
        assert_eq!(GraphSpec::parse(&s.to_string(), 2).unwrap(), s);
    }
}
