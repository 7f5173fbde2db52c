//! Exact solvers for small tori: maximum independent set, `k`-coloring
//! search, and the chromatic number with certified bounds.
//!
//! The search kernels work on an adjacency structure built by breadth-first
//! search over the explicit torus, independent of the closed-form distance
//! used by [`crate::graph::verify_coloring`]. Every witness is re-checked
//! through the latter before it is returned.

mod adjacency;
mod alpha;
mod chi;
mod coloring;

use std::time::{Duration, Instant};

pub use adjacency::SquareGraph;
pub use alpha::{max_independent_set, packing_bound, AlphaResult};
pub use chi::{ceil_lower_bound, chromatic_number, ChiResult, LowerSource, CLIQUE_LOWER_BOUND};
pub use coloring::{find_k_coloring, KColoring};

/// Limits on a single search. `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl SearchBudget {
    pub const UNLIMITED: Self = Self {
        time_limit: None,
        node_limit: None,
    };

    pub fn seconds(secs: u64) -> Self {
        Self {
            time_limit: Some(Duration::from_secs(secs)),
            node_limit: None,
        }
    }

    pub fn nodes(limit: u64) -> Self {
        Self {
            time_limit: None,
            node_limit: Some(limit),
        }
    }
}

/// 60 seconds per search call, no node limit.
impl Default for SearchBudget {
    fn default() -> Self {
        Self::seconds(60)
    }
}

/// Tracks node count and elapsed time against a budget.
pub(crate) struct Meter {
    budget: SearchBudget,
    start: Instant,
    pub(crate) nodes: u64,
    out: bool,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self {
            budget,
            start: Instant::now(),
            nodes: 0,
            out: false,
        }
    }

    /// Counts one node; returns `true` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.out {
            return true;
        }
        self.nodes += 1;
        if self.budget.node_limit.is_some_and(|l| self.nodes > l) {
            self.out = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(t) = self.budget.time_limit {
                self.out = self.start.elapsed() >= t;
            }
        }
        self.out
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.out
    }
}
