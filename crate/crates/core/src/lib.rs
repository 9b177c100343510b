//! Centrality measures and numerical checks of the neighbor-averaging
//! ("friendship") paradox.
//!
//! For a connected graph with random-walk operator `C = D^{-1} A`, the mean
//! over nodes of the neighbor-averaged score, `<1, C r> / n`, is never below
//! the plain mean `<1, r> / n` when `r` is degree, walk-count, eigenvector,
//! Katz or PageRank centrality. This crate computes those centralities on
//! sparse graphs, reports both means together with the edge-sampled mean and
//! the per-node bias, and evaluates the identities and inequalities that
//! underlie each case against dense reference computations.

pub mod analysis;
pub mod centrality;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod paradox;
pub mod rng;

pub use centrality::{CentralityParams, CentralityVector, KatzAlpha, Measure, SpectralResult};
pub use error::{Error, Result};
pub use generators::{generate, Model, RandomGraphSpec};
pub use graph::Graph;
pub use paradox::{BiasDistribution, ComparisonDecomposition, ParadoxReport};
