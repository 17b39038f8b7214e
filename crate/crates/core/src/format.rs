//! The quiver file format: a JSON document
//! `{"vertices": n, "edges": [[i, j, mult], ...], "loops": [...], "dim": [...]}`
//! with 0-based vertices, `i < j`, and keys in exactly that order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DimVector, WeightedGraph};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub vertices: usize,
    pub edges: Vec<[u64; 3]>,
    pub loops: Vec<u32>,
    pub dim: Vec<i64>,
}

impl QuiverFile {
    pub fn from_graph(g: &WeightedGraph, a: &DimVector) -> Self {
        QuiverFile {
            vertices: g.n_vertices(),
            edges: g.edges().into_iter().map(|(i, j, m)| [i as u64, j as u64, m as u64]).collect(),
            loops: g.loop_vector().to_vec(),
            dim: a.as_slice().to_vec(),
        }
    }

    pub fn into_graph(self) -> Result<(WeightedGraph, DimVector)> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for [i, j, m] in self.edges {
            if i >= j {
                return Err(Error::Parse(format!("edge [{i},{j},{m}] must have i < j")));
            }
            edges.push((i as usize, j as usize, m as u32));
        }
        if self.dim.len() != self.vertices {
            return Err(Error::DimensionMismatch { expected: self.vertices, got: self.dim.len() });
        }
        if self.dim.iter().any(|&x| x < 0) {
            return Err(Error::Parse("dimension vector entries must be nonnegative".into()));
        }
        let g = WeightedGraph::new(self.vertices, &edges, self.loops)?;
        Ok((g, DimVector::new(self.dim)))
    }

    /// Canonical single-line serialisation.
    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Serialises a graph with its dimension vector.
pub fn write_quiver(g: &WeightedGraph, a: &DimVector) -> String {
    QuiverFile::from_graph(g, a).to_canonical_string()
}

/// Parses and validates a quiver document.
pub fn read_quiver(text: &str) -> Result<(WeightedGraph, DimVector)> {
    QuiverFile::parse(text)?.into_graph()
}
