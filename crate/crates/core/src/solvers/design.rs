use serde::Serialize;

use super::SolveOptions;
use crate::general::GeneralHypergraph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignCheck {
    /// Uniform, and every pair of vertices lies in exactly `lambda` edges.
    pub is_design: bool,
    pub v: usize,
    pub block_size: Option<usize>,
    pub lambda: usize,
    /// As many edges as vertices.
    pub symmetric: bool,
}

/// Checks whether `d` is a 2-(v, k, t) design for its common edge size `k`.
pub fn is_2_design(d: &GeneralHypergraph, t: usize) -> DesignCheck {
    let v = d.vertex_count();
    let block_size = d.uniformity();
    let is_design = block_size.is_some() && {
        let cod = d.codegrees();
        (0..v).all(|a| (a + 1..v).all(|b| cod[a * v + b] == t))
    };
    DesignCheck { is_design, v, block_size, lambda: t, symmetric: d.edge_count() == v }
}

/// Partition of the edges into perfect matchings, if one exists.
///
/// Classes are filled one at a time by covering the lowest uncovered vertex
/// with each unassigned edge through it in turn. Repeated edges are treated
/// as distinct.
pub fn is_resolvable(d: &GeneralHypergraph, opts: SolveOptions) -> Result<Option<Vec<Vec<usize>>>> {
    let v = d.vertex_count();
    let Some(k) = d.uniformity() else {
        return Ok(None);
    };
    if k == 0 || !v.is_multiple_of(k) {
        return Ok(None);
    }
    let per_class = v / k;
    if !d.edge_count().is_multiple_of(per_class) {
        return Ok(None);
    }
    let degrees = d.degrees();
    let classes = d.edge_count() / per_class;
    if degrees.iter().any(|&x| x != classes) {
        return Ok(None);
    }
    let mut through = vec![Vec::new(); v];
    for (i, e) in d.edges().iter().enumerate() {
        for &x in e {
            through[x].push(i);
        }
    }
    let sets: Vec<VertexSet> = d.edges().iter().map(|e| VertexSet::from_ids(v, e.iter().copied())).collect();
    let mut r = Resolver {
        through,
        sets,
        assigned: vec![false; d.edge_count()],
        done: Vec::new(),
        current: Vec::new(),
        steps: 0,
        budget: opts.step_budget,
        per_class,
    };
    let covered = VertexSet::new(v);
    if r.fill(&covered)? {
        Ok(Some(r.done))
    } else {
        Ok(None)
    }
}

struct Resolver {
    through: Vec<Vec<usize>>,
    sets: Vec<VertexSet>,
    assigned: Vec<bool>,
    done: Vec<Vec<usize>>,
    current: Vec<usize>,
    steps: u64,
    budget: Option<u64>,
    per_class: usize,
}

impl Resolver {
    fn fill(&mut self, covered: &VertexSet) -> Result<bool> {
        self.steps += 1;
        if self.budget.is_some_and(|b| self.steps > b) {
            return Err(Error::BudgetExhausted);
        }
        if self.current.len() == self.per_class {
            let class = std::mem::take(&mut self.current);
            self.done.push(class);
            if self.assigned.iter().all(|&a| a) {
                return Ok(true);
            }
            let fresh = VertexSet::new(covered.capacity());
            if self.fill(&fresh)? {
                return Ok(true);
            }
            self.current = self.done.pop().expect("class just pushed");
            return Ok(false);
        }
        let u = (0..covered.capacity()).find(|&x| !covered.contains(x)).expect("class incomplete");
        let candidates = self.through[u].clone();
        for e in candidates {
            if self.assigned[e] || !self.sets[e].is_disjoint(covered) {
                continue;
            }
            self.assigned[e] = true;
            self.current.push(e);
            let mut next = covered.clone();
            next.union_with(&self.sets[e]);
            if self.fill(&next)? {
                return Ok(true);
            }
            self.current.pop();
            self.assigned[e] = false;
        }
        Ok(false)
    }
}
