//! End-to-end pipeline: temporal graph → edge-overlap graph → (nice) tree
//! decomposition → maximum weight independent set → maximum weighted 0-1
//! timed matching. Also the exhaustive matching oracle used to certify the
//! pipeline at desk scale.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::lexset;
use crate::mwis::{self, MwisError};
use crate::overlap::{build_overlap_graph, OverlapError, OverlapGraph};
use crate::temporal::{TemporalGraph, TimedMatching};
use crate::treedec::{
    decompose_exact, decompose_heuristic, lift_decomposition, make_nice, EliminationStrategy,
    ExactResult, LiftError, TreeDecomposition,
};
use crate::weight::Weight;

pub const ORACLE_MAX_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecompositionStrategy {
    MinFill,
    MinDegree,
    /// Branch-and-bound minimum-width decomposition; only sensible for
    /// small overlap graphs.
    Exact,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub strategy: DecompositionStrategy,
    /// Decompose the underlying graph and lift the decomposition to the
    /// overlap graph instead of decomposing the overlap graph directly.
    pub lift: bool,
    /// Node-expansion budget for the exact strategy.
    pub exact_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            strategy: DecompositionStrategy::MinFill,
            lift: false,
            exact_budget: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PhaseTimings {
    pub overlap_build_us: u64,
    pub decompose_us: u64,
    pub nice_us: u64,
    pub dp_us: u64,
    pub extract_us: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport<W> {
    pub matching: TimedMatching<W>,
    /// Weight of the maximum weight independent set found by the dynamic
    /// program; equals the matching weight by construction.
    pub mwis_weight: W,
    pub overlap_vertices: usize,
    pub overlap_edges: usize,
    /// Width of the decomposition the dynamic program ran on.
    pub decomposition_width: usize,
    /// Width of the underlying-graph decomposition when lifting was used.
    pub underlying_width: Option<usize>,
    pub nice_node_count: usize,
    pub timings: PhaseTimings,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Mwis(#[from] MwisError),
    #[error(transparent)]
    Overlap(#[from] OverlapError),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error("exact decomposition budget exhausted")]
    BudgetExhausted,
    #[error("graph has {n_edges} edges; the matching oracle supports at most {max}")]
    TooManyEdges { n_edges: usize, max: usize },
}

/// Computes a maximum weighted 0-1 timed matching of `g`. Deterministic for
/// fixed options; ties in total weight resolve to the lexicographically
/// smallest sorted edge-id set.
pub fn solve<W: Weight>(g: &TemporalGraph<W>, opts: &SolveOptions) -> Result<SolveReport<W>, SolveError> {
    let started = Instant::now();
    let og = build_overlap_graph(g);
    let overlap_build_us = elapsed_us(started);

    let started = Instant::now();
    let (td, underlying_width) = choose_decomposition(g, &og, opts)?;
    let decompose_us = elapsed_us(started);

    let started = Instant::now();
    let ntd = make_nice(&td);
    let nice_us = elapsed_us(started);

    let started = Instant::now();
    let solution = mwis::tree_dp(&og.graph, &ntd)?;
    let dp_us = elapsed_us(started);

    let started = Instant::now();
    let matching = og.matching_from_independent_set(&solution.vertices)?;
    debug_assert!(g.verify_matching(&matching.edge_ids).unwrap_or(false));
    let extract_us = elapsed_us(started);

    Ok(SolveReport {
        mwis_weight: solution.weight,
        overlap_vertices: og.n_vertices(),
        overlap_edges: og.n_edges(),
        decomposition_width: td.width(),
        underlying_width,
        nice_node_count: ntd.n_nodes(),
        matching,
        timings: PhaseTimings {
            overlap_build_us,
            decompose_us,
            nice_us,
            dp_us,
            extract_us,
        },
    })
}

/// The decomposition the pipeline would run its dynamic program on, plus
/// the underlying-graph width when lifting. Direct mode decomposes the
/// overlap graph; lift mode decomposes the underlying graph and lifts it,
/// checking the constructive width bound in bag-size form so empty graphs
/// stay meaningful: |lifted bag| ≤ |bag| · Δ(underlying).
pub fn choose_decomposition<W: Weight>(
    g: &TemporalGraph<W>,
    og: &OverlapGraph<W>,
    opts: &SolveOptions,
) -> Result<(TreeDecomposition, Option<usize>), SolveError> {
    let decompose = |target: &crate::graph::StaticGraph<W>| -> Result<TreeDecomposition, SolveError> {
        match opts.strategy {
            DecompositionStrategy::MinFill => {
                Ok(decompose_heuristic(target, EliminationStrategy::MinFill))
            }
            DecompositionStrategy::MinDegree => {
                Ok(decompose_heuristic(target, EliminationStrategy::MinDegree))
            }
            DecompositionStrategy::Exact => {
                match decompose_exact(
                    target,
                    target.n_vertices().saturating_sub(1),
                    opts.exact_budget,
                ) {
                    ExactResult::Decomposition(td) => Ok(td),
                    ExactResult::BudgetExhausted => Err(SolveError::BudgetExhausted),
                    ExactResult::Infeasible => {
                        unreachable!("search at maximum width cannot be infeasible")
                    }
                }
            }
        }
    };

    if opts.lift {
        let underlying = g.underlying_graph();
        let td_u = decompose(&underlying)?;
        let lifted = lift_decomposition(&td_u, g, og)?;
        assert!(
            lifted.max_bag_size() <= td_u.max_bag_size() * underlying.max_degree(),
            "lifted decomposition exceeds the line-graph width bound"
        );
        Ok((lifted, Some(td_u.width())))
    } else {
        Ok((decompose(&og.graph)?, None))
    }
}

/// Exhaustive maximum weighted 0-1 timed matching over all edge subsets.
/// Same tie-breaking as [`solve`]; limited to [`ORACLE_MAX_EDGES`] edges.
pub fn matching_brute_force<W: Weight>(g: &TemporalGraph<W>) -> Result<TimedMatching<W>, SolveError> {
    let m = g.n_edges();
    if m > ORACLE_MAX_EDGES {
        return Err(SolveError::TooManyEdges {
            n_edges: m,
            max: ORACLE_MAX_EDGES,
        });
    }
    // conflicts[e]: edges overlapping e, as a bitmask.
    let mut conflicts = vec![0u64; m];
    for a in 0..m {
        for b in a + 1..m {
            if crate::temporal::edges_overlap(&g.edges()[a], &g.edges()[b]) {
                conflicts[a] |= 1u64 << b;
                conflicts[b] |= 1u64 << a;
            }
        }
    }

    let mut best_mask = 0u64;
    let mut best_weight = W::zero();
    for mask in 0u64..1u64 << m {
        let mut valid = true;
        let mut weight = W::zero();
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if conflicts[e] & mask != 0 {
                valid = false;
                break;
            }
            weight = weight + g.edges()[e].weight;
        }
        if !valid {
            continue;
        }
        if weight > best_weight
            || (weight == best_weight && lexset::lex_less(&[mask], &[best_mask]))
        {
            best_weight = weight;
            best_mask = mask;
        }
    }
    Ok(TimedMatching {
        edge_ids: lexset::to_sorted_ids(&[best_mask]),
        total_weight: best_weight,
    })
}

/// Maximum cardinality 0-1 timed matching: every weight forced to one, then
/// the weighted pipeline.
pub fn max_cardinality_solve<W: Weight>(g: &TemporalGraph<W>) -> Result<SolveReport<W>, SolveError> {
    solve(&g.with_unit_weights(), &SolveOptions::default())
}

fn elapsed_us(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX)
}
