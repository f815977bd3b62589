use std::fmt;

use serde::{Serialize, Serializer};

use crate::hypergraph::{PartitionedHypergraph, Vertex};
use crate::vertex_set::VertexSet;

/// Which construction produced a certificate, including the internal case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Empty,
    SingleEdge,
    Trivial,
    Exact,
    DegreeSum,
    TwoEdge { case: u8 },
    ThreeEdge { case: u8 },
    /// The pipeline's seed set `X ∪ Z` already met every edge.
    YCover,
    Pipeline(Box<Provenance>),
    KwiseCommon { k: usize },
    Kwise(Box<Provenance>),
    /// The (k-1)-subset search ran out of budget; the size bound is not met.
    KwiseFallback,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Empty => f.write_str("empty"),
            Provenance::SingleEdge => f.write_str("single-edge"),
            Provenance::Trivial => f.write_str("trivial"),
            Provenance::Exact => f.write_str("exact"),
            Provenance::DegreeSum => f.write_str("degree-sum"),
            Provenance::TwoEdge { case } => write!(f, "two-edge/case-{case}"),
            Provenance::ThreeEdge { case } => write!(f, "three-edge/case-{case}"),
            Provenance::YCover => f.write_str("pipeline/y-cover"),
            Provenance::Pipeline(inner) => write!(f, "pipeline/{inner}"),
            Provenance::KwiseCommon { k } => write!(f, "kwise/common-intersection-{k}"),
            Provenance::Kwise(inner) => write!(f, "kwise/{inner}"),
            Provenance::KwiseFallback => f.write_str("kwise/fallback-trivial"),
        }
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A vertex set claimed to meet every edge in at least `s` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    /// Sorted by global id (part-major).
    pub vertices: Vec<Vertex>,
    pub s: usize,
    pub provenance: Provenance,
    pub claimed_bound: Option<usize>,
}

impl CoverCertificate {
    pub fn from_set(
        h: &PartitionedHypergraph,
        set: &VertexSet,
        s: usize,
        provenance: Provenance,
        claimed_bound: Option<usize>,
    ) -> Self {
        CoverCertificate {
            vertices: set.iter().map(|id| h.vertex_at(id)).collect(),
            s,
            provenance,
            claimed_bound,
        }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn to_set(&self, h: &PartitionedHypergraph) -> VertexSet {
        h.set_of(self.vertices.iter().copied())
    }

    /// Full scan: every edge holds at least `s` certificate vertices, and the
    /// size respects the claimed bound.
    pub fn is_valid_for(&self, h: &PartitionedHypergraph) -> bool {
        let in_range = self
            .vertices
            .iter()
            .all(|v| v.part < h.r() && v.index < h.part_sizes()[v.part]);
        if !in_range {
            return false;
        }
        if self.claimed_bound.is_some_and(|b| self.size() > b) {
            return false;
        }
        let set = self.to_set(h);
        (0..h.edge_count()).all(|e| h.edge_set(e).intersection_len(&set) >= self.s)
    }

    /// First edge met in fewer than `s` vertices, if any.
    pub fn first_uncovered(&self, h: &PartitionedHypergraph) -> Option<usize> {
        let set = self.to_set(h);
        (0..h.edge_count()).find(|&e| h.edge_set(e).intersection_len(&set) < self.s)
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub(crate) fn with_claim(mut self, claimed_bound: Option<usize>) -> Self {
        self.claimed_bound = claimed_bound;
        self
    }
}
