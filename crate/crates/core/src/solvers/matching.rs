use super::{SolveOptions, SolveStatus};
use crate::hypergraph::PartitionedHypergraph;
use crate::vertex_set::VertexSet;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingSolution {
    pub status: SolveStatus,
    pub value: usize,
    /// Indices of a maximum (or best found) set of pairwise disjoint edges.
    pub edges: Vec<usize>,
    pub steps: u64,
}

struct Search<'a> {
    h: &'a PartitionedHypergraph,
    best: Vec<usize>,
    current: Vec<usize>,
    steps: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl Search<'_> {
    /// Edges at index >= `from` disjoint from `used`.
    fn compatible(&self, from: usize, used: &VertexSet) -> Vec<usize> {
        (from..self.h.edge_count())
            .filter(|&e| self.h.edge_set(e).is_disjoint(used))
            .collect()
    }

    fn run(&mut self, candidates: &[usize], used: &VertexSet) {
        if self.exhausted {
            return;
        }
        self.steps += 1;
        if self.budget.is_some_and(|b| self.steps > b) {
            self.exhausted = true;
            return;
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        // Every remaining candidate could join at best.
        if self.current.len() + candidates.len() <= self.best.len() {
            return;
        }
        for (i, &e) in candidates.iter().enumerate() {
            if self.current.len() + (candidates.len() - i) <= self.best.len() {
                return;
            }
            let mut next_used = used.clone();
            next_used.union_with(self.h.edge_set(e));
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&f| self.h.edge_set(f).is_disjoint(&next_used))
                .collect();
            self.current.push(e);
            self.run(&next, &next_used);
            self.current.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Maximum number of pairwise disjoint edges.
pub fn nu_exact(h: &PartitionedHypergraph, opts: SolveOptions) -> Result<MatchingSolution> {
    let mut search = Search {
        h,
        best: Vec::new(),
        current: Vec::new(),
        steps: 0,
        budget: opts.step_budget,
        exhausted: false,
    };
    let used = h.empty_set();
    let all = search.compatible(0, &used);
    search.run(&all, &used);
    let status = if search.exhausted { SolveStatus::Unknown } else { SolveStatus::Exact };
    Ok(MatchingSolution {
        status,
        value: search.best.len(),
        edges: search.best,
        steps: search.steps,
    })
}
