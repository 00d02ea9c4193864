use std::time::Duration;

/// Per-run measurements.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunMetrics {
    /// Supersteps (standard, AM) or global iterations including iteration 0
    /// (hybrid).
    pub global_iterations: u64,
    /// Cross-partition messages delivered at barriers, counted after
    /// combining.
    pub remote_messages: u64,
    /// Cross-partition messages buffered before combining.
    pub remote_messages_uncombined: u64,
    /// Pseudo-supersteps summed over partitions and iterations.
    pub pseudo_supersteps: u64,
    pub wall_time: Duration,
    pub converged: bool,
    /// Every `send` issued by any vertex.
    pub messages_sent: u64,
    pub placed_local: u64,
    pub placed_boundary: u64,
    pub placed_remote: u64,
    /// Number of `compute` invocations.
    pub vertex_executions: u64,
    /// Barrier deliveries performed.
    pub barrier_deliveries: u64,
    /// Barrier deliveries observed while some partition was inside a local
    /// phase. Always zero for a correct engine.
    pub local_phase_deliveries: u64,
}

/// State of the whole computation at a barrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TerminationReport {
    pub active_vertices: u64,
    /// Messages not yet consumed: buffered remote batches plus every
    /// non-empty incoming queue.
    pub in_transit: u64,
    pub max_partition_active: u64,
}

impl TerminationReport {
    /// All vertices inactive and no message in transit.
    pub fn is_terminated(&self) -> bool {
        self.active_vertices == 0 && self.in_transit == 0
    }
}

/// Final vertex values, indexed by vertex id, plus metrics. When
/// `metrics.converged` is false the values are the partial state at abort.
#[derive(Debug, Clone)]
pub struct RunOutcome<V> {
    pub values: Vec<V>,
    pub metrics: RunMetrics,
}

/// Wall clock for a run. Reads zero on targets without a system clock.
pub(crate) struct Stopwatch {
    #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub fn start() -> Self {
        Self {
            #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
            start: std::time::Instant::now(),
        }
    }

    pub fn elapsed(&self) -> Duration {
        #[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
        return self.start.elapsed();
        #[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
        Duration::ZERO
    }
}
