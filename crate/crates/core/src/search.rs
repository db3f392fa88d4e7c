//! Budgets and tri-state outcomes shared by the exhaustive searches.
//!
//! Every search in this crate is exact: it either produces a witness, proves
//! that none exists, or gives up with [`Search::Unknown`] once its budget of
//! node expansions (or its optional wall-clock deadline) runs out. A result is
//! never guessed.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "ITLINE_BUDGET";

/// Default node-expansion cap per search invocation.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Outcome of a budgeted exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    Absent,
    Unknown(Exhausted),
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Search::Absent)
    }

    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    /// `Some(true)` if found, `Some(false)` if absent, `None` if unknown.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Search::Found(_) => Some(true),
            Search::Absent => Some(false),
            Search::Unknown(_) => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Unknown(e) => Search::Unknown(e),
        }
    }

    /// Converts to a plain `Option`, turning `Unknown` into an error.
    pub fn into_option(self) -> Result<Option<T>, Exhausted> {
        match self {
            Search::Found(t) => Ok(Some(t)),
            Search::Absent => Ok(None),
            Search::Unknown(e) => Err(e),
        }
    }
}

/// Diagnostics for a search that ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exhausted {
    pub operation: String,
    pub budget: u64,
    pub expanded: u64,
    pub timed_out: bool,
}

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.timed_out {
            write!(
                f,
                "{} hit its deadline after {} node expansions",
                self.operation, self.expanded
            )
        } else {
            write!(
                f,
                "{} exhausted its budget of {} node expansions",
                self.operation, self.budget
            )
        }
    }
}

/// Limits for a single search invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of node expansions before reporting `Unknown`.
    pub budget: u64,
    /// Optional wall-clock limit. Results that depend on it are reported as
    /// `Unknown`, so determinism only holds when it is not hit.
    pub timeout: Option<Duration>,
    /// Worker threads for searches that support splitting; 1 = sequential.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: budget_from_env().unwrap_or(DEFAULT_BUDGET),
            timeout: None,
            workers: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..SearchOptions::default()
        }
    }

    pub(crate) fn meter(&self, operation: &str) -> Meter {
        Meter::new(operation, *self)
    }
}

/// Reads [`BUDGET_ENV`], ignoring unparsable values.
pub fn budget_from_env() -> Option<u64> {
    std::env::var(BUDGET_ENV).ok()?.trim().parse().ok()
}

/// Node-expansion counter. Shareable across worker threads.
#[derive(Debug)]
pub(crate) struct Meter {
    operation: String,
    budget: u64,
    deadline: Option<Instant>,
    expanded: AtomicU64,
}

impl Meter {
    pub(crate) fn new(operation: &str, opts: SearchOptions) -> Self {
        Meter {
            operation: operation.to_string(),
            budget: opts.budget,
            deadline: opts.timeout.map(|t| Instant::now() + t),
            expanded: AtomicU64::new(0),
        }
    }

    /// Counts one expansion; errors once the budget or deadline is exceeded.
    #[inline]
    pub(crate) fn tick(&self) -> Result<(), Exhausted> {
        let n = self.expanded.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            return Err(self.exhausted(false));
        }
        if n.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(self.exhausted(true));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn expanded(&self) -> u64 {
        self.expanded.load(Ordering::Relaxed)
    }

    pub(crate) fn exhausted(&self, timed_out: bool) -> Exhausted {
        Exhausted {
            operation: self.operation.clone(),
            budget: self.budget,
            expanded: self.expanded(),
            timed_out,
        }
    }
}
