//! Solver toolkit for the maximum weighted 0-1 timed matching problem on
//! temporal graphs.
//!
//! A temporal graph carries edges that exist during disjoint half-open time
//! intervals; a 0-1 timed matching is a set of edges no two of which share
//! an endpoint while being simultaneously active. The solver transforms the
//! input into its edge-overlap graph, computes a (nice) tree decomposition,
//! runs a maximum-weight-independent-set dynamic program over it, and maps
//! the result back to a matching. The crate also ships the parameterized
//! reduction from Independent Set to 0-1 timed matching, exhaustive oracles
//! for desk-scale certification, and a seeded instance generator.
//!
//! All numeric types are generic over the [`Weight`] scalar (`f32`/`f64`);
//! the `*F64` aliases below cover the common case.

pub mod error;
pub mod generator;
pub mod graph;
mod lexset;
pub mod mwis;
pub mod overlap;
pub mod reduction;
pub mod solver;
pub mod temporal;
pub mod treedec;
pub mod weight;

pub use error::{GraphError, ParseError};
pub use generator::{GenError, GenSpec, UnderlyingFamily, WeightGrid};
pub use graph::StaticGraph;
pub use mwis::MwisSolution;
pub use overlap::{build_overlap_graph, OverlapGraph};
pub use reduction::{reduce_independent_set, ReducedInstance};
pub use solver::{
    matching_brute_force, max_cardinality_solve, solve, DecompositionStrategy, SolveOptions,
    SolveReport,
};
pub use temporal::{Interval, TemporalEdge, TemporalGraph, TimedMatching};
pub use treedec::{
    decompose_exact, decompose_heuristic, lift_decomposition, make_nice, validate_decomposition,
    EliminationStrategy, ExactResult, NiceTreeDecomposition, TreeDecomposition, Violation,
};
pub use weight::Weight;

pub type TemporalGraphF64 = TemporalGraph<f64>;
pub type TemporalEdgeF64 = TemporalEdge<f64>;
pub type StaticGraphF64 = StaticGraph<f64>;
pub type OverlapGraphF64 = OverlapGraph<f64>;
pub type TimedMatchingF64 = TimedMatching<f64>;
pub type SolveReportF64 = SolveReport<f64>;
pub type ReducedInstanceF64 = ReducedInstance<f64>;
