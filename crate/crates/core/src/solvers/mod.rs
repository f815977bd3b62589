//! Exact oracles, all by exhaustive or branch-and-bound search.
//!
//! Searches run against an optional step budget. Running out of budget is
//! reported as [`SolveStatus::Unknown`] together with the best value found so
//! far; it never turns into a wrong answer.

mod cover_search;
mod design;
mod matching;

pub use cover_search::{tau_s_exact, CoverSolution};
pub use design::{is_2_design, is_resolvable, DesignCheck};
pub use matching::{nu_exact, MatchingSolution};

use serde::Serialize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Stop as soon as a solution of at most this size is known.
    pub upper_limit: Option<usize>,
    /// Maximum number of search nodes.
    pub step_budget: Option<u64>,
    /// Split the root branching across the rayon pool.
    pub parallel: bool,
}

impl SolveOptions {
    pub fn with_budget(step_budget: u64) -> Self {
        SolveOptions { step_budget: Some(step_budget), ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    /// The value is proven optimal.
    Exact,
    /// Stopped early because a solution within `upper_limit` was found.
    LimitReached,
    /// The step budget ran out; the value is only the best found.
    Unknown,
}
