//! The r-partite r-uniform hypergraph model and its intersection machinery.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::{CoverCertificate, Provenance};
use crate::general::GeneralHypergraph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// A vertex addressed by its part and its local index inside that part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub part: usize,
    pub index: usize,
}

impl Vertex {
    pub fn new(part: usize, index: usize) -> Self {
        Vertex { part, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.part, self.index)
    }
}

/// One broken structural invariant of a candidate hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    EmptyPart { part: usize },
    WrongArity { edge: usize, len: usize, r: usize },
    OutOfRange { edge: usize, part: usize, index: usize, part_size: usize },
    DuplicateEdge { edge: usize, first: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::EmptyPart { part } => write!(f, "part {part} is empty"),
            Violation::WrongArity { edge, len, r } => {
                write!(f, "edge {edge} has {len} entries, expected {r}")
            }
            Violation::OutOfRange { edge, part, index, part_size } => write!(
                f,
                "edge {edge} picks index {index} in part {part} of size {part_size}"
            ),
            Violation::DuplicateEdge { edge, first } => {
                write!(f, "edge {edge} duplicates edge {first}")
            }
        }
    }
}

/// Checks raw part sizes and edges against the partiteness invariants.
///
/// Violations are returned as data; an empty list means the pair can be turned
/// into a [`PartitionedHypergraph`].
pub fn validate_parts(part_sizes: &[usize], edges: &[Vec<usize>]) -> Vec<Violation> {
    let r = part_sizes.len();
    let mut out = Vec::new();
    for (part, &size) in part_sizes.iter().enumerate() {
        if size == 0 {
            out.push(Violation::EmptyPart { part });
        }
    }
    let mut seen: HashMap<&[usize], usize> = HashMap::new();
    for (edge, picks) in edges.iter().enumerate() {
        if picks.len() != r {
            out.push(Violation::WrongArity { edge, len: picks.len(), r });
            continue;
        }
        for (part, (&index, &part_size)) in picks.iter().zip(part_sizes).enumerate() {
            if index >= part_size {
                out.push(Violation::OutOfRange { edge, part, index, part_size });
            }
        }
        if let Some(&first) = seen.get(picks.as_slice()) {
            out.push(Violation::DuplicateEdge { edge, first });
        } else {
            seen.insert(picks, edge);
        }
    }
    out
}

/// An r-uniform r-partite hypergraph. Each edge is stored as the list of
/// local indices it picks, one per part, with a global-id bitset alongside.
///
/// Global vertex ids concatenate the parts in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedHypergraph {
    part_sizes: Vec<usize>,
    offsets: Vec<usize>,
    edges: Vec<Vec<usize>>,
    edge_sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
}

/// Intersection statistics of up to three edges.
///
/// `tprime` is `|e1 ∩ e2|`; `t1` counts vertices in all three edges, `t2`
/// those in exactly two, split as `a = |e1∩e2 \ e3|`, `b = |e1∩e3 \ e2|`,
/// `c = |e2∩e3 \ e1|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    pub tprime: usize,
    pub t1: usize,
    pub t2: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl PartitionedHypergraph {
    pub fn new(part_sizes: Vec<usize>, edges: Vec<Vec<usize>>) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidArgument("at least one part is required".into()));
        }
        let violations = validate_parts(&part_sizes, &edges);
        if !violations.is_empty() {
            return Err(Error::InvalidHypergraph(violations));
        }
        Ok(Self::assemble(part_sizes, edges))
    }

    /// Builds from possibly repeated edges, keeping the first copy of each.
    pub fn new_dedup(part_sizes: Vec<usize>, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let edges = edges.into_iter().filter(|e| seen.insert(e.clone())).collect();
        Self::new(part_sizes, edges)
    }

    fn assemble(part_sizes: Vec<usize>, edges: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(part_sizes.len());
        let mut acc = 0;
        for &s in &part_sizes {
            offsets.push(acc);
            acc += s;
        }
        let edge_sets = edges
            .iter()
            .map(|e| VertexSet::from_ids(acc, e.iter().enumerate().map(|(j, &i)| offsets[j] + i)))
            .collect();
        PartitionedHypergraph { part_sizes, offsets, edges, edge_sets }
    }

    /// Uniformity, which equals the number of parts.
    pub fn r(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn vertex_count(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Local indices of edge `e`, position `j` being the vertex picked in part `j`.
    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    pub fn edge_set(&self, e: usize) -> &VertexSet {
        &self.edge_sets[e]
    }

    pub fn vertex_id(&self, v: Vertex) -> usize {
        self.offsets[v.part] + v.index
    }

    pub fn vertex_at(&self, id: usize) -> Vertex {
        let part = self.offsets.partition_point(|&o| o <= id) - 1;
        Vertex::new(part, id - self.offsets[part])
    }

    /// Global id of the vertex edge `e` picks in part `j`.
    pub fn edge_vertex_id(&self, e: usize, j: usize) -> usize {
        self.offsets[j] + self.edges[e][j]
    }

    pub fn part_ids(&self, j: usize) -> std::ops::Range<usize> {
        self.offsets[j]..self.offsets[j] + self.part_sizes[j]
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.vertex_count())
    }

    pub fn set_of(&self, vertices: impl IntoIterator<Item = Vertex>) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), vertices.into_iter().map(|v| self.vertex_id(v)))
    }

    /// Always empty for a constructed value; kept for symmetry with file loading.
    pub fn validate(&self) -> Vec<Violation> {
        validate_parts(&self.part_sizes, &self.edges)
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeIndex { index: e, count: self.edges.len() })
        }
    }

    pub fn intersection_size(&self, e: usize, f: usize) -> Result<usize> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        Ok(self.intersection_unchecked(e, f))
    }

    pub(crate) fn intersection_unchecked(&self, e: usize, f: usize) -> usize {
        self.edges[e].iter().zip(&self.edges[f]).filter(|(a, b)| a == b).count()
    }

    /// Smallest pairwise intersection with the lexicographically first pair
    /// attaining it.
    pub fn min_pairwise_intersection(&self) -> Result<(usize, (usize, usize))> {
        let m = self.edges.len();
        if m < 2 {
            return Err(Error::TooFewEdges { needed: 2, found: m });
        }
        let mut best = (usize::MAX, (0, 0));
        for e in 0..m {
            for f in e + 1..m {
                let s = self.intersection_unchecked(e, f);
                if s < best.0 {
                    best = (s, (e, f));
                }
            }
        }
        Ok(best)
    }

    /// Whether every pair of edges shares at least `t` vertices.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        match self.min_pairwise_intersection() {
            Ok((m, _)) => m >= t,
            Err(_) => true,
        }
    }

    /// `Some(t)` when all pairwise intersections equal `t`.
    pub fn is_strictly_intersecting(&self) -> Option<usize> {
        let m = self.edges.len();
        if m < 2 {
            return None;
        }
        let t = self.intersection_unchecked(0, 1);
        for e in 0..m {
            for f in e + 1..m {
                if self.intersection_unchecked(e, f) != t {
                    return None;
                }
            }
        }
        Some(t)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k < 2 || k > self.edges.len() {
            return Err(Error::InvalidArgument(format!(
                "k = {k} must lie in [2, {}]",
                self.edges.len()
            )));
        }
        Ok(())
    }

    /// Minimum size of the common intersection of `k` distinct edges.
    pub fn kwise_min_intersection(&self, k: usize) -> Result<usize> {
        self.check_k(k)?;
        let m = self.edges.len();
        let mut best = usize::MAX;
        for first in 0..=m - k {
            self.kwise_min_from(first, k, &mut best);
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// Same value as [`Self::kwise_min_intersection`], with the first edge of
    /// each k-subset distributed across the rayon pool.
    pub fn kwise_min_intersection_parallel(&self, k: usize) -> Result<usize> {
        self.check_k(k)?;
        let m = self.edges.len();
        Ok((0..=m - k)
            .into_par_iter()
            .map(|first| {
                let mut best = usize::MAX;
                self.kwise_min_from(first, k, &mut best);
                best
            })
            .min()
            .unwrap_or(usize::MAX))
    }

    fn kwise_min_from(&self, first: usize, k: usize, best: &mut usize) {
        fn go(
            h: &PartitionedHypergraph,
            common: &VertexSet,
            start: usize,
            left: usize,
            best: &mut usize,
        ) {
            if left == 0 {
                *best = (*best).min(common.len());
                return;
            }
            let m = h.edges.len();
            for f in start..=m - left {
                if *best == 0 {
                    return;
                }
                let mut next = common.clone();
                next.intersect_with(&h.edge_sets[f]);
                go(h, &next, f + 1, left - 1, best);
            }
        }
        go(self, &self.edge_sets[first], first + 1, k - 1, best);
    }

    /// Lexicographically first `k`-subset of edges whose common intersection
    /// has at most `threshold` vertices.
    ///
    /// Intersections only shrink as edges are added, so a prefix that already
    /// meets the threshold is completed with the next lowest indices.
    /// `budget` caps the number of visited prefixes.
    pub fn find_kwise_at_most(
        &self,
        k: usize,
        threshold: usize,
        budget: Option<u64>,
    ) -> Result<Option<Vec<usize>>> {
        let m = self.edges.len();
        if k == 0 || k > m {
            return Ok(None);
        }
        let full = {
            let mut s = self.empty_set();
            for j in 0..self.r() {
                for id in self.part_ids(j) {
                    s.insert(id);
                }
            }
            s
        };
        let mut steps = 0u64;
        let mut chosen = Vec::with_capacity(k);
        self.find_at_most_rec(&full, 0, k, threshold, budget, &mut steps, &mut chosen)
    }

    #[allow(clippy::too_many_arguments)]
    fn find_at_most_rec(
        &self,
        common: &VertexSet,
        start: usize,
        k: usize,
        threshold: usize,
        budget: Option<u64>,
        steps: &mut u64,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>> {
        let m = self.edges.len();
        let left = k - chosen.len();
        if !chosen.is_empty() && common.len() <= threshold {
            let mut out = chosen.clone();
            out.extend(start..start + left);
            return Ok(Some(out));
        }
        if left == 0 {
            return Ok(None);
        }
        for f in start..=m - left {
            *steps += 1;
            if budget.is_some_and(|b| *steps > b) {
                return Err(Error::BudgetExhausted);
            }
            let mut next = common.clone();
            next.intersect_with(&self.edge_sets[f]);
            chosen.push(f);
            let found = self.find_at_most_rec(&next, f + 1, k, threshold, budget, steps, chosen)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Degree of every vertex, indexed by global id.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for e in 0..self.edges.len() {
            for j in 0..self.r() {
                deg[self.edge_vertex_id(e, j)] += 1;
            }
        }
        deg
    }

    /// Minimum and maximum degree over all vertices, isolated ones included.
    pub fn degree_profile(&self) -> DegreeProfile {
        let deg = self.degrees();
        let min = deg.iter().copied().min().unwrap_or(0);
        let max = deg.iter().copied().max().unwrap_or(0);
        DegreeProfile { min, max, regular: min == max }
    }

    /// Largest total incidence with `es` that a transversal avoiding `cover`
    /// can reach: the sum over parts of the best remaining vertex degree.
    pub fn delta_h(&self, cover: &VertexSet, es: &[usize]) -> Result<usize> {
        for &e in es {
            self.check_edge(e)?;
        }
        let mut total = 0;
        for j in 0..self.r() {
            let mut best: Option<usize> = None;
            for id in self.part_ids(j) {
                if cover.contains(id) {
                    continue;
                }
                let local = id - self.offsets[j];
                let d = es.iter().filter(|&&e| self.edges[e][j] == local).count();
                best = Some(best.map_or(d, |b: usize| b.max(d)));
            }
            total += best.ok_or(Error::PartExhausted { part: j })?;
        }
        Ok(total)
    }

    /// Degree-sum cover test: returns a certificate when
    /// `delta_h(cover; es) <= k*t - 1`, after confirming it by full scan.
    pub fn observation_cover_check(
        &self,
        t: usize,
        cover: &VertexSet,
        es: &[usize],
    ) -> Result<Option<CoverCertificate>> {
        let delta = self.delta_h(cover, es)?;
        if delta + 1 > es.len() * t {
            return Ok(None);
        }
        let cert = CoverCertificate::from_set(self, cover, 1, Provenance::DegreeSum, Some(cover.len()));
        if !cert.is_valid_for(self) {
            return Err(Error::CertificateRejected(format!(
                "{} (is the hypergraph {t}-intersecting?)",
                Provenance::DegreeSum
            )));
        }
        Ok(Some(cert))
    }

    pub fn intersection_profile(&self, e1: usize, e2: usize, e3: usize) -> Result<IntersectionProfile> {
        for e in [e1, e2, e3] {
            self.check_edge(e)?;
        }
        let (x, y, z) = (&self.edges[e1], &self.edges[e2], &self.edges[e3]);
        let mut p = IntersectionProfile { tprime: 0, t1: 0, t2: 0, a: 0, b: 0, c: 0 };
        for j in 0..self.r() {
            match (x[j] == y[j], x[j] == z[j], y[j] == z[j]) {
                (true, true, _) => p.t1 += 1,
                (true, false, _) => p.a += 1,
                (false, true, _) => p.b += 1,
                (false, false, true) => p.c += 1,
                _ => {}
            }
        }
        p.t2 = p.a + p.b + p.c;
        p.tprime = p.t1 + p.a;
        Ok(p)
    }

    /// Transposed incidence structure. Vertices of the dual are edge indices;
    /// every non-isolated vertex contributes one dual edge, in global-id order.
    pub fn dual(&self) -> GeneralHypergraph {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count()];
        for e in 0..self.edges.len() {
            for j in 0..self.r() {
                incident[self.edge_vertex_id(e, j)].push(e);
            }
        }
        GeneralHypergraph::new_unchecked(
            self.edges.len(),
            incident.into_iter().filter(|l| !l.is_empty()).collect(),
        )
    }

    /// The same hypergraph with edges sorted lexicographically.
    pub fn canonical(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.sort();
        Self::assemble(self.part_sizes.clone(), edges)
    }
}
