//! Exact domination invariants on small graphs, with emphasis on 2-movable
//! total domination in joins and coronas.
//!
//! * [`graph`]: bitset graphs, standard families, join and corona products,
//!   labeled connected enumeration and seeded sampling.
//! * [`domination`]: the domination predicates and 2-movability witnesses.
//! * [`solver`]: minimum-cardinality search for `γ`, `γ_t`, `γ_m²`, `γ_mt²`.
//! * [`io`]: graph6, edge lists, certificates and reports.
//! * [`harness`]: per-instance theorem checks and family sweeps.

pub mod domination;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solver;

pub use domination::{
    closed_neighborhood, find_pair_move, is_2movable, is_dominating, is_total_dominating,
    open_neighborhood, Base, Movability, MoveAction, MoveError, MoveWitness,
};
pub use graph::{
    enumerate_connected, random_connected, CoronaLayout, Family, Graph, GraphError, VertexId,
    VertexSet,
};
pub use harness::{
    sweep, CheckConfig, HarnessError, HypothesisMode, InstanceFamily, SweepOptions, TheoremId,
    TheoremReport,
};
pub use io::{parse_edgelist, parse_graph6, write_graph6, Certificate, FormatError};
pub use solver::{
    all_minimum_sets, solve, solve_naive, InvariantKind, InvariantResult, SolveError,
};
