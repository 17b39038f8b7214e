//! Exact combinatorics of four-dimensional Nakajima quiver varieties:
//! root systems of weighted graphs, the classification of dimension vectors
//! with `p = 2`, symplectic leaf stratifications, Namikawa Weyl groups and
//! resolution counts via secondary hyperplane arrangements.

pub mod ade;
pub mod arrangement;
pub mod classification;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod iso;
pub mod namikawa;
pub mod roots;
pub mod sigma;
pub mod stratification;
pub mod tables;

pub use ade::{hrr, mir, AdeType};
pub use error::{Error, Result};
pub use family::{build_family, FamilyName, TypeTag};
pub use graph::{DimVector, WeightedGraph};
