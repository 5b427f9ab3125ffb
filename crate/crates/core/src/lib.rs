//! Exact zero forcing numbers for small graphs, functigraph construction
//! `C(G, f)`, path cover numbers, and a mechanical auditor that checks the
//! known bounds and closed forms for zero forcing on functigraphs.
//!
//! Vertices are `0..n` internally. Functigraph copies use the labels
//! `u_i ↦ i - 1` and `v_i ↦ n + i - 1`; user-facing output converts back to
//! 1-based `u_i` / `v_i` names.

pub mod audit;
pub mod bitset;
pub mod caps;
pub mod cli;
pub mod error;
pub mod forcing;
pub mod functigraph;
pub mod graph;
pub mod path_cover;

pub use bitset::VertexSet;
pub use caps::Caps;
pub use error::{Error, Result};
pub use forcing::{
    all_minimum_sets, closure, is_zero_forcing, propagation_time, zero_forcing_number,
    zero_forcing_number_capped, ColorState, ForceEvent, ForcingChronicle, SearchStats, ZResult,
};
pub use functigraph::{
    build_functigraph, enumerate_functions, named_construction, parse_function_spec,
    FunctigraphInstance, FunctionFilter, VertexFunction,
};
pub use graph::{FamilySpec, Graph, GraphClass, GraphData, SrgParams};
pub use path_cover::{is_induced_path, path_cover_number, PathCoverResult};
