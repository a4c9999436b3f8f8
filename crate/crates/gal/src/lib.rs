//! Graph activation laboratory.
//!
//! Exact combinatorial parameters (independence number, clique cover number,
//! chromatic number), the exact fractional packing LP with its dual clique
//! cover, and certified Lovasz/Schrijver/Szegedy numbers, plus the blow-up
//! constructions that make alpha(G (x) H) meet its factorized upper bounds.

pub mod activation;
pub mod bitset;
pub mod bounds;
pub mod cliques;
pub mod coloring;
pub mod error;
pub mod format;
pub mod graph;
pub mod independence;
pub mod lp;
pub mod packing;
pub mod rational;
pub mod report;
pub mod representations;
pub mod sdp;
pub mod symmetry;
pub mod theta;
pub mod weights;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
pub use weights::Weights;
