//! Node budgets and the three-state search outcome shared by every search.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Default node budget when neither the caller nor the environment sets one.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "FULKERSON_LAB_BUDGET";

/// Result of a bounded search.
///
/// `NotFound` is only reported when the whole search space was enumerated;
/// running out of budget is `Unknown`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    Unknown,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::Unknown => SearchOutcome::Unknown,
        }
    }
}

/// A shared, thread-safe node counter that doubles as a cancellation token.
#[derive(Debug)]
pub struct Budget {
    remaining: AtomicU64,
    cancelled: AtomicBool,
}

impl Budget {
    pub fn new(nodes: u64) -> Self {
        Budget {
            remaining: AtomicU64::new(nodes),
            cancelled: AtomicBool::new(false),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    /// Budget from `FULKERSON_LAB_BUDGET`, falling back to [`DEFAULT_BUDGET`].
    pub fn from_env() -> Self {
        let nodes = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self::new(nodes)
    }

    /// Consume one node. Returns `false` once the budget is spent or cancelled.
    #[inline]
    pub fn tick(&self) -> bool {
        if self.cancelled.load(Ordering::Relaxed) {
            return false;
        }
        let prev = self.remaining.load(Ordering::Relaxed);
        if prev == 0 {
            self.cancelled.store(true, Ordering::Relaxed);
            return false;
        }
        if prev != u64::MAX {
            self.remaining.fetch_sub(1, Ordering::Relaxed);
        }
        true
    }

    pub fn cancel(&self) {
        self.cancelled.store(true, Ordering::Relaxed);
    }

    pub fn is_exhausted(&self) -> bool {
        self.cancelled.load(Ordering::Relaxed)
    }

    pub fn remaining(&self) -> u64 {
        self.remaining.load(Ordering::Relaxed)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}
