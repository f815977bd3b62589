//! Non-partite hypergraphs, used for duals and design checks.

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralHypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl GeneralHypergraph {
    /// Edges are sorted internally; repeated edges are kept.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        for (i, e) in edges.iter().enumerate() {
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::InvalidArgument(format!(
                    "edge {i} uses vertex {v} but there are only {vertex_count} vertices"
                )));
            }
        }
        Ok(Self::new_unchecked(vertex_count, edges))
    }

    pub(crate) fn new_unchecked(vertex_count: usize, mut edges: Vec<Vec<usize>>) -> Self {
        for e in &mut edges {
            e.sort_unstable();
            e.dedup();
        }
        GeneralHypergraph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Common edge size, if all edges have the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Number of edges containing both `u` and `v`, for every pair `u < v`,
    /// stored row-major in a `vertex_count²` table.
    pub fn codegrees(&self) -> Vec<usize> {
        let n = self.vertex_count;
        let mut table = vec![0; n * n];
        for e in &self.edges {
            for (i, &u) in e.iter().enumerate() {
                for &v in &e[i + 1..] {
                    table[u * n + v] += 1;
                    table[v * n + u] += 1;
                }
            }
        }
        table
    }

    /// Transposed incidence; isolated vertices contribute no edge.
    pub fn dual(&self) -> GeneralHypergraph {
        let mut incident = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        Self::new_unchecked(
            self.edges.len(),
            incident.into_iter().filter(|l| !l.is_empty()).collect(),
        )
    }

    /// Edge multiset with edges in sorted order, for structural comparison.
    pub fn sorted_edges(&self) -> Vec<Vec<usize>> {
        let mut e = self.edges.clone();
        e.sort();
        e
    }
}
