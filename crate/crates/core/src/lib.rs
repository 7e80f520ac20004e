//! Spanning low-chromatic subgraphs that keep connectivity or degree.
//!
//! Every constructive routine returns a certificate (partition, trees, cut
//! witness, violating vertex) that can be re-checked with the independent
//! validators in the same module or against the exhaustive [`oracle`].

pub mod connectivity;
pub mod cut_improver;
pub mod degree;
pub mod ear;
pub mod error;
pub mod flow;
pub mod gallery;
pub mod graph;
pub mod mader;
pub mod oracle;
pub mod random;
pub mod scalar;
pub mod suite;
pub mod tournament;
pub mod tree_packing;

pub use error::{Error, Result};
pub use graph::{AnyGraph, Digraph, Graph, GraphFile, Partition};
pub use scalar::Scalar;
