/// Global reduction operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggregateOp {
    Min,
    Max,
    Sum,
}

impl AggregateOp {
    pub fn identity(self) -> f64 {
        match self {
            Self::Min => f64::INFINITY,
            Self::Max => f64::NEG_INFINITY,
            Self::Sum => 0.0,
        }
    }

    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            Self::Min => a.min(b),
            Self::Max => a.max(b),
            Self::Sum => a + b,
        }
    }
}

/// Folds per-partition submissions into the value every partition observes
/// in the next global iteration. Partitions that submitted nothing pass
/// `None`.
pub fn reduce_aggregates(partials: impl IntoIterator<Item = Option<f64>>, op: AggregateOp) -> f64 {
    partials
        .into_iter()
        .flatten()
        .fold(op.identity(), |acc, x| op.apply(acc, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_of_partitions() {
        assert_eq!(
            reduce_aggregates([Some(2.0), Some(3.0), Some(5.0)], AggregateOp::Sum),
            10.0
        );
    }

    #[test]
    fn empty_min_is_infinity() {
        assert_eq!(reduce_aggregates([], AggregateOp::Min), f64::INFINITY);
        assert_eq!(reduce_aggregates([None, None], AggregateOp::Min), f64::INFINITY);
    }

    #[test]
    fn max_matches_direct_count() {
        let counts = [4usize, 0, 9, 3];
        let direct = *counts.iter().max().unwrap() as f64;
        let reduced = reduce_aggregates(counts.iter().map(|&c| Some(c as f64)), AggregateOp::Max);
        assert_eq!(reduced, direct);
    }
}
