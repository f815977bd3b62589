//! Toolkit for r-uniform r-partite t-intersecting hypergraphs, called
//! `(r,t)`-graphs here.
//!
//! The crate is organised around [`PartitionedHypergraph`]:
//!
//! * [`generators`] builds the extremal families (level constructions,
//!   truncated projective planes, blowups, affine duals, random instances).
//! * [`covers`] runs the constructive two- and three-edge cover algorithms and
//!   returns [`CoverCertificate`]s that are always checked by a full scan.
//! * [`solvers`] provides exact oracles: minimum s-covers, matching numbers,
//!   design and resolvability checks.
//! * [`bounds`] evaluates the closed-form bounds in exact arithmetic.
//! * [`cli`] is the command-line surface and the `rtgraph-v1` file format.

pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod covers;
mod error;
pub mod general;
pub mod generators;
pub mod hypergraph;
pub mod solvers;
mod vertex_set;

pub use certificate::{CoverCertificate, Provenance};
pub use error::{Error, Result};
pub use general::GeneralHypergraph;
pub use hypergraph::{
    DegreeProfile, IntersectionProfile, PartitionedHypergraph, Vertex, Violation,
};
pub use vertex_set::VertexSet;
