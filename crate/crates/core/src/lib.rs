//! Bell coloring graphs of finite simple graphs: construction, clique
//! classification, matching realizations and reconstruction.

pub mod bell;
pub mod canon;
pub mod clique;
pub mod core_recon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod json;
pub mod matching;
pub mod partition;
pub mod tree_recon;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Multigraph, Vertex};
