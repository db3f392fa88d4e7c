//! Traceability and hamiltonicity of iterated line graphs.
//!
//! The crate decides, for a connected multigraph `G` and `k ≥ 1`, whether
//! `G` has a subgraph in the families `EU_k(G)` / `EUP_k(G)` that control
//! hamiltonicity / traceability of `L^k(G)`, computes the hamiltonian index
//! `h(G)` and the hamiltonian path index `h_p(G)`, evaluates the known
//! upper bounds on `h_p`, and checks all of it against direct computation on
//! the iterated line graphs.

mod bitset;
pub mod error;
pub mod eup;
pub mod families;
pub mod format;
pub mod graph;
pub mod hamilton;
pub mod harness;
pub mod indices;
pub mod linegraph;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use eup::{check_conditions, find_witness, ConditionReport, Variant};
pub use graph::{EdgeId, MultiGraph, Subgraph, Trail, VertexId};
pub use indices::{bounds, hamiltonian_index, hamiltonian_path_index, BoundsReport, IndexResult};
pub use linegraph::{iterated_line_graph, line_graph};
pub use search::{Search, SearchOptions};
