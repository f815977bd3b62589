use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use super::{SolveOptions, SolveStatus};
use crate::certificate::{CoverCertificate, Provenance};
use crate::hypergraph::PartitionedHypergraph;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub status: SolveStatus,
    /// Size of the best s-cover found; optimal when `status` is `Exact`.
    pub value: usize,
    pub witness: CoverCertificate,
    /// Proven lower bound on the optimum.
    pub lower_bound: usize,
    pub steps: u64,
}

impl CoverSolution {
    pub fn exact_value(&self) -> Option<usize> {
        (self.status == SolveStatus::Exact).then_some(self.value)
    }
}

struct Instance {
    s: usize,
    vertices: usize,
    edge_vertices: Vec<Vec<usize>>,
    vertex_edges: Vec<Vec<usize>>,
}

struct Shared {
    best_size: AtomicUsize,
    best: Mutex<Vec<usize>>,
    steps: AtomicU64,
    budget: Option<u64>,
    limit: Option<usize>,
    out_of_budget: AtomicBool,
    limit_hit: AtomicBool,
}

impl Shared {
    fn offer(&self, chosen: &[usize]) {
        let mut best = self.best.lock().expect("incumbent lock");
        if chosen.len() < self.best_size.load(Ordering::SeqCst) {
            *best = chosen.to_vec();
            self.best_size.store(chosen.len(), Ordering::SeqCst);
            if self.limit.is_some_and(|l| chosen.len() <= l) {
                self.limit_hit.store(true, Ordering::SeqCst);
            }
        }
    }

    fn stopped(&self) -> bool {
        self.out_of_budget.load(Ordering::Relaxed) || self.limit_hit.load(Ordering::Relaxed)
    }
}

#[derive(Clone)]
struct State {
    chosen: Vec<usize>,
    in_cover: Vec<bool>,
    forbidden: Vec<bool>,
    count: Vec<usize>,
}

impl State {
    fn add(&mut self, inst: &Instance, v: usize) {
        self.in_cover[v] = true;
        self.chosen.push(v);
        for &e in &inst.vertex_edges[v] {
            self.count[e] += 1;
        }
    }

    fn undo(&mut self, inst: &Instance, v: usize) {
        self.in_cover[v] = false;
        self.chosen.pop();
        for &e in &inst.vertex_edges[v] {
            self.count[e] -= 1;
        }
    }
}

enum Node {
    Done,
    Infeasible,
    Pruned,
    /// Vertices to branch over, best first.
    Branch(Vec<usize>),
}

fn evaluate(inst: &Instance, st: &State, best: usize, gain: &mut [usize]) -> Node {
    let mut pick: Option<(usize, usize)> = None; // (slack, edge)
    let mut max_need = 0;
    let mut total_need = 0;
    gain.iter_mut().for_each(|g| *g = 0);
    for (e, vs) in inst.edge_vertices.iter().enumerate() {
        let need = inst.s.saturating_sub(st.count[e]);
        if need == 0 {
            continue;
        }
        let mut options = 0;
        for &v in vs {
            if !st.in_cover[v] && !st.forbidden[v] {
                options += 1;
                gain[v] += need;
            }
        }
        if options < need {
            return Node::Infeasible;
        }
        let slack = options - need;
        if pick.is_none_or(|(s, _)| slack < s) {
            pick = Some((slack, e));
        }
        max_need = max_need.max(need);
        total_need += need;
    }
    let Some((_, edge)) = pick else {
        return Node::Done;
    };
    let max_gain = gain.iter().copied().max().unwrap_or(0).max(1);
    let bound = st.chosen.len() + max_need.max(total_need.div_ceil(max_gain));
    if bound >= best {
        return Node::Pruned;
    }
    let mut opts: Vec<usize> = inst.edge_vertices[edge]
        .iter()
        .copied()
        .filter(|&v| !st.in_cover[v] && !st.forbidden[v])
        .collect();
    opts.sort_by_key(|&v| (std::cmp::Reverse(gain[v]), v));
    Node::Branch(opts)
}

fn search(inst: &Instance, shared: &Shared, st: &mut State, gain: &mut [usize]) {
    if shared.stopped() {
        return;
    }
    let steps = shared.steps.fetch_add(1, Ordering::Relaxed) + 1;
    if shared.budget.is_some_and(|b| steps > b) {
        shared.out_of_budget.store(true, Ordering::Relaxed);
        return;
    }
    let best = shared.best_size.load(Ordering::SeqCst);
    match evaluate(inst, st, best, gain) {
        Node::Done => shared.offer(&st.chosen),
        Node::Infeasible | Node::Pruned => {}
        Node::Branch(options) => {
            for (i, &v) in options.iter().enumerate() {
                st.add(inst, v);
                search(inst, shared, st, gain);
                st.undo(inst, v);
                st.forbidden[v] = true;
                if shared.stopped() {
                    for &u in &options[..=i] {
                        st.forbidden[u] = false;
                    }
                    return;
                }
            }
            for &u in &options {
                st.forbidden[u] = false;
            }
        }
    }
}

/// Repeatedly adds the vertex covering the most outstanding demand.
fn greedy_cover(inst: &Instance) -> Vec<usize> {
    let mut st = State {
        chosen: Vec::new(),
        in_cover: vec![false; inst.vertices],
        forbidden: vec![false; inst.vertices],
        count: vec![0; inst.edge_vertices.len()],
    };
    loop {
        let mut gain = vec![0; inst.vertices];
        let mut any = false;
        for (e, vs) in inst.edge_vertices.iter().enumerate() {
            if st.count[e] < inst.s {
                any = true;
                for &v in vs.iter().filter(|&&v| !st.in_cover[v]) {
                    gain[v] += 1;
                }
            }
        }
        if !any {
            return st.chosen;
        }
        let v = (0..inst.vertices).max_by_key(|&v| (gain[v], std::cmp::Reverse(v))).unwrap();
        st.add(inst, v);
    }
}

/// `s` times the size of a greedy family of pairwise disjoint edges.
fn packing_bound(h: &PartitionedHypergraph, s: usize) -> usize {
    let mut used = h.empty_set();
    let mut packed = 0;
    for e in 0..h.edge_count() {
        if h.edge_set(e).is_disjoint(&used) {
            used.union_with(h.edge_set(e));
            packed += 1;
        }
    }
    packed * s
}

/// Minimum size of a vertex set meeting every edge in at least `s` vertices.
///
/// Branch and bound: branch on the unmet edge with the least slack (ties to
/// the lowest index), trying each still-allowed vertex of it and excluding
/// the ones already tried. Nodes are bounded by the largest outstanding
/// demand and by total demand over the best single-vertex gain; the root also
/// uses a greedy disjoint-edge packing.
pub fn tau_s_exact(h: &PartitionedHypergraph, s: usize, opts: SolveOptions) -> Result<CoverSolution> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    if s > h.r() && h.edge_count() > 0 {
        return Err(Error::InvalidArgument(format!(
            "no {s}-cover exists: edges have only {} vertices",
            h.r()
        )));
    }
    let edge_vertices: Vec<Vec<usize>> = (0..h.edge_count())
        .map(|e| (0..h.r()).map(|j| h.edge_vertex_id(e, j)).collect())
        .collect();
    let mut vertex_edges = vec![Vec::new(); h.vertex_count()];
    for (e, vs) in edge_vertices.iter().enumerate() {
        for &v in vs {
            vertex_edges[v].push(e);
        }
    }
    let inst = Instance { s, vertices: h.vertex_count(), edge_vertices, vertex_edges };

    let incumbent = greedy_cover(&inst);
    let root_lb = packing_bound(h, s).max(if h.edge_count() > 0 { s } else { 0 });
    let shared = Shared {
        best_size: AtomicUsize::new(incumbent.len()),
        best: Mutex::new(incumbent),
        steps: AtomicU64::new(0),
        budget: opts.step_budget,
        limit: opts.upper_limit,
        out_of_budget: AtomicBool::new(false),
        limit_hit: AtomicBool::new(false),
    };
    // The greedy incumbent may already satisfy the limit.
    if opts.upper_limit.is_some_and(|l| shared.best_size.load(Ordering::SeqCst) <= l) {
        shared.limit_hit.store(true, Ordering::SeqCst);
    }

    let root = State {
        chosen: Vec::new(),
        in_cover: vec![false; inst.vertices],
        forbidden: vec![false; inst.vertices],
        count: vec![0; h.edge_count()],
    };
    if shared.best_size.load(Ordering::SeqCst) > root_lb && !shared.stopped() {
        if opts.parallel {
            search_parallel(&inst, &shared, root);
        } else {
            let mut st = root;
            let mut gain = vec![0; inst.vertices];
            search(&inst, &shared, &mut st, &mut gain);
        }
    }

    let best = shared.best.into_inner().expect("incumbent lock");
    let value = best.len();
    let budget_out = shared.out_of_budget.load(Ordering::SeqCst);
    let limit_hit = shared.limit_hit.load(Ordering::SeqCst);
    let status = if value <= root_lb || (!budget_out && !limit_hit) {
        SolveStatus::Exact
    } else if budget_out {
        SolveStatus::Unknown
    } else {
        SolveStatus::LimitReached
    };
    let lower_bound = if status == SolveStatus::Exact { value } else { root_lb };
    let set = crate::VertexSet::from_ids(h.vertex_count(), best);
    let witness = CoverCertificate::from_set(h, &set, s, Provenance::Exact, Some(value));
    debug_assert!(witness.is_valid_for(h));
    Ok(CoverSolution {
        status,
        value,
        witness,
        lower_bound,
        steps: shared.steps.load(Ordering::SeqCst),
    })
}

fn search_parallel(inst: &Instance, shared: &Shared, root: State) {
    let mut gain = vec![0; inst.vertices];
    shared.steps.fetch_add(1, Ordering::Relaxed);
    let best = shared.best_size.load(Ordering::SeqCst);
    let options = match evaluate(inst, &root, best, &mut gain) {
        Node::Branch(options) => options,
        Node::Done => {
            shared.offer(&root.chosen);
            return;
        }
        Node::Infeasible | Node::Pruned => return,
    };
    options.par_iter().enumerate().for_each(|(i, &v)| {
        let mut st = root.clone();
        for &u in &options[..i] {
            st.forbidden[u] = true;
        }
        st.add(inst, v);
        let mut gain = vec![0; inst.vertices];
        search(inst, shared, &mut st, &mut gain);
    });
}
