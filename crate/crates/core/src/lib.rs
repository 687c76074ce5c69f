//! Exact solvers for zero forcing problems and their dual Grundy domination
//! sequence problems.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, random generators
//! and the command line live in the `zforce` companion crate.
//!
//! Modules, bottom up:
//!
//! * [`graph`]: simple undirected graphs, hypergraphs, vertex bitsets.
//! * [`rules`]: the Z, T and D color-change rules, closures, forcing-set
//!   verification and brute-force minimum forcing sets.
//! * [`sequence`]: dominating, total dominating, Z-, L- and local
//!   L-sequences, hypergraph covering sequences, and the constructive
//!   conversions between sequences and forcing sets.
//! * [`treedec`]: tree decompositions, exact and heuristic construction, and
//!   the five-node-type nice form with rule nodes.
//! * [`dp`]: the signature dynamic program over a nice tree decomposition.
//! * [`reductions`]: instance generators for the hardness reductions and the
//!   leaf corona.
//! * [`enumerate`]: exhaustive enumeration of small graphs up to isomorphism.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dp;
pub mod enumerate;
pub mod graph;
pub mod reductions;
pub mod rules;
pub mod sequence;
pub mod treedec;

pub use graph::{Bipartition, Graph, GraphBuilder, GraphError, Hypergraph, VertexSet};
pub use rules::{Coloring, Rule, RuleApplication, RuleSet};
pub use sequence::SequenceVariant;

/// Size guard shared by the exhaustive oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("instance too large for exhaustive search: {size} > {limit}")]
pub struct GuardExceeded {
    pub size: usize,
    pub limit: usize,
}
