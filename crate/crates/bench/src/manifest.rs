use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use hybrid_bsp::{GraphFormat, GraphSpec, Mode};
use sha2::{Digest, Sha256};

use crate::error::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Sssp,
    PagerankInc,
    PagerankPlain,
    Bm,
}

impl FromStr for Algo {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sssp" => Ok(Self::Sssp),
            "pagerank-inc" => Ok(Self::PagerankInc),
            "pagerank-plain" => Ok(Self::PagerankPlain),
            "bm" => Ok(Self::Bm),
            other => Err(BenchError::Usage(format!(
                "unknown algorithm `{other}` (expected sssp, pagerank-inc, pagerank-plain or bm)"
            ))),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sssp => "sssp",
            Self::PagerankInc => "pagerank-inc",
            Self::PagerankPlain => "pagerank-plain",
            Self::Bm => "bm",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Generated(GraphSpec),
    File { path: PathBuf, format: GraphFormat },
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generated(spec) => write!(f, "{spec}"),
            Self::File { path, format } => write!(f, "{}:{format}", path.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartSource {
    Hash,
    Blocks,
    File(PathBuf),
}

impl FromStr for PartSource {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hash" => Ok(Self::Hash),
            "blocks" => Ok(Self::Blocks),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(Self::File(path.into())),
                _ => Err(BenchError::Usage(format!(
                    "unknown partitioning `{s}` (expected hash, blocks or file:PATH)"
                ))),
            },
        }
    }
}

impl fmt::Display for PartSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Hash => f.write_str("hash"),
            Self::Blocks => f.write_str("blocks"),
            Self::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A fully validated description of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Manifest {
    pub algo: Algo,
    pub engine: Mode,
    pub graph: GraphSource,
    pub k: usize,
    pub part: PartSource,
    /// Original id of the SSSP source vertex.
    pub source: Option<u64>,
    pub delta: Option<f64>,
    pub budget: Option<u32>,
    pub seed: u64,
    pub boundary_participation: bool,
    pub async_local_messaging: bool,
    pub combiner: bool,
    pub max_iterations: u64,
}

impl Manifest {
    /// Checks the cross-field requirements that flag parsing cannot.
    pub fn validate(&self) -> Result<(), BenchError> {
        let usage = |m: &str| Err(BenchError::Usage(m.into()));
        if self.k == 0 {
            return usage("--k must be at least 1");
        }
        if self.max_iterations == 0 {
            return usage("--max-iterations must be at least 1");
        }
        match self.algo {
            Algo::Sssp if self.source.is_none() => usage("--algo sssp requires --source"),
            Algo::PagerankInc => match self.delta {
                None => usage("--algo pagerank-inc requires --delta"),
                Some(d) if !(d.is_finite() && d > 0.0) => usage("--delta must be positive"),
                _ => Ok(()),
            },
            Algo::PagerankPlain => match self.budget {
                None => usage("--algo pagerank-plain requires --budget"),
                Some(0) => usage("--budget must be at least 1"),
                _ => Ok(()),
            },
            _ => Ok(()),
        }
    }

    /// Canonical one-line form. Parsing it back yields the same manifest.
    pub fn canonical(&self) -> String {
        let mut s = format!("--algo {} --engine {} ", self.algo, self.engine);
        match &self.graph {
            GraphSource::Generated(spec) => s += &format!("--gen {spec}"),
            GraphSource::File { path, format } => s += &format!("--graph {} --format {format}", path.display()),
        }
        s += &format!(" --k {} --part {} --seed {}", self.k, self.part, self.seed);
        if let Some(v) = self.source {
            s += &format!(" --source {v}");
        }
        if let Some(d) = self.delta {
            s += &format!(" --delta {d:e}");
        }
        if let Some(b) = self.budget {
            s += &format!(" --budget {b}");
        }
        if !self.boundary_participation {
            s += " --no-boundary-participation";
        }
        if !self.async_local_messaging {
            s += " --no-async";
        }
        if !self.combiner {
            s += " --no-combiner";
        }
        s += &format!(" --max-iterations {}", self.max_iterations);
        s
    }

    /// First 16 hex digits of the SHA-256 of [`Manifest::canonical`].
    pub fn hash(&self) -> String {
        short_digest(self.canonical().as_bytes())
    }
}

pub(crate) fn short_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}
