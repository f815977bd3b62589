use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::generators::GeneratorMetadata;
use crate::hypergraph::PartitionedHypergraph;
use crate::{Error, Result};

/// On-disk instance. The canonical form has edges sorted lexicographically
/// and compact JSON followed by a single newline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format: String,
    pub r: usize,
    pub part_sizes: Vec<usize>,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<GeneratorMetadata>,
}

impl InstanceFile {
    pub const FORMAT: &'static str = "rtgraph-v1";

    pub fn from_hypergraph(h: &PartitionedHypergraph, metadata: Option<GeneratorMetadata>) -> Self {
        let mut edges = h.edges().to_vec();
        edges.sort();
        InstanceFile {
            format: Self::FORMAT.to_string(),
            r: h.r(),
            part_sizes: h.part_sizes().to_vec(),
            edges,
            metadata,
        }
    }

    /// Checks the header fields; edge validation is left to
    /// [`PartitionedHypergraph::new`].
    pub fn check_header(&self) -> Result<()> {
        if self.format != Self::FORMAT {
            return Err(Error::InvalidArgument(format!(
                "unsupported format {:?}, expected {:?}",
                self.format,
                Self::FORMAT
            )));
        }
        if self.r != self.part_sizes.len() {
            return Err(Error::InvalidArgument(format!(
                "r = {} but {} part sizes given",
                self.r,
                self.part_sizes.len()
            )));
        }
        Ok(())
    }

    pub fn to_hypergraph(&self) -> Result<PartitionedHypergraph> {
        self.check_header()?;
        PartitionedHypergraph::new(self.part_sizes.clone(), self.edges.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("instance JSON: {e}")))
    }

    pub fn to_canonical_json(&self) -> String {
        let mut canon = self.clone();
        canon.edges.sort();
        let mut s = serde_json::to_string(&canon).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_canonical_json())
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
    }
}
