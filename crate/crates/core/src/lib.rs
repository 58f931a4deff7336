//! Exact minimum clique covers and minimum colorings for two hereditary
//! graph classes that are dual under complementation:
//!
//! * graphs with no induced bull and no induced house — covered by cliques
//!   via a five-way structural recursion (`solver::clique_cover`);
//! * graphs with no induced P5 and no induced bull — colored by running the
//!   cover engine on the complement (`solver::chromatic_coloring`).
//!
//! Everything is exact and certified: inputs are screened by an induced
//! subgraph detector that returns re-checkable witnesses, every partition is
//! verified before it is reported, and brute-force oracles
//! (`oracle`) provide independent ground truth for small instances.
//!
//! All types own their data and use no interior mutability, so they are
//! `Send + Sync` and independent instances can be solved concurrently.

pub mod cli;
pub mod detect;
pub mod dimacs;
pub mod error;
pub mod gen;
pub mod graph;
pub mod matching;
pub mod modules;
pub mod oracle;
pub mod report;
pub mod solver;

pub use error::Error;
pub use graph::{Graph, VertexSet};
