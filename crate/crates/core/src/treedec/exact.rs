//! Exact minimum-width decomposition for small graphs via branch and bound
//! over elimination orderings, with clique and degeneracy lower bounds.
//! Intended as the oracle against which the heuristics are checked; graphs
//! beyond a few dozen vertices belong to the heuristic path.

use super::heuristic::decomposition_from_order;
use super::{decompose_heuristic, EliminationStrategy, TreeDecomposition};
use crate::graph::StaticGraph;
use crate::weight::Weight;

/// Outcome of the bounded exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactResult {
    /// A minimum-width decomposition with width within the requested bound.
    Decomposition(TreeDecomposition),
    /// Proven: no decomposition of width at most `max_width` exists.
    Infeasible,
    /// The node-expansion budget ran out before the search completed.
    BudgetExhausted,
}

impl ExactResult {
    pub fn decomposition(self) -> Option<TreeDecomposition> {
        match self {
            ExactResult::Decomposition(td) => Some(td),
            _ => None,
        }
    }
}

const MAX_EXACT_VERTICES: usize = 64;

/// Searches for a minimum-width tree decomposition of `g` with width at
/// most `max_width`, spending at most `budget` node expansions. Supports up
/// to 64 vertices; callers should stay around 32 or below.
pub fn decompose_exact<W: Weight>(
    g: &StaticGraph<W>,
    max_width: usize,
    budget: u64,
) -> ExactResult {
    let n = g.n_vertices();
    assert!(
        n <= MAX_EXACT_VERTICES,
        "exact decomposition supports at most {} vertices, got {}",
        MAX_EXACT_VERTICES,
        n
    );

    if n == 0 {
        return ExactResult::Decomposition(decomposition_from_order(g, &[]));
    }

    let adj: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |m, &u| m | (1u64 << u))
        })
        .collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };

    // Clique lower bound: any clique must fit inside one bag.
    let clique_lb = greedy_clique_size(&adj, full).saturating_sub(1);
    if clique_lb > max_width {
        return ExactResult::Infeasible;
    }

    // Seed the incumbent with the min-fill heuristic when it fits.
    let heuristic = decompose_heuristic(g, EliminationStrategy::MinFill);
    let mut best_bag: usize = usize::MAX; // max bag size of the incumbent
    let mut best_order: Option<Vec<usize>> = None;
    let heuristic_bag = heuristic.max_bag_size();
    if heuristic_bag <= max_width + 1 {
        best_bag = heuristic_bag;
    }
    if best_bag == clique_lb + 1 {
        // The heuristic already matches the clique lower bound.
        return ExactResult::Decomposition(heuristic);
    }

    let mut search = Search {
        max_allowed_bag: max_width + 1,
        best_bag,
        best_order: &mut best_order,
        budget,
        exhausted: false,
    };
    let mut order = Vec::with_capacity(n);
    search.dfs(&adj, full, 1, &mut order);
    let exhausted = search.exhausted;
    let final_best_bag = search.best_bag;

    if exhausted {
        return ExactResult::BudgetExhausted;
    }
    match best_order {
        Some(order) => ExactResult::Decomposition(decomposition_from_order(g, &order)),
        None => {
            if final_best_bag <= max_width + 1 {
                // Search completed without beating the heuristic: it is optimal.
                ExactResult::Decomposition(heuristic)
            } else {
                ExactResult::Infeasible
            }
        }
    }
}

struct Search<'a> {
    max_allowed_bag: usize,
    /// Max bag size of the best decomposition known so far (`usize::MAX`
    /// when none fits the requested width yet).
    best_bag: usize,
    best_order: &'a mut Option<Vec<usize>>,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    /// Explores all elimination orders of the `remaining` filled graph.
    /// `current_max_bag` is the largest bag on the path so far.
    fn dfs(&mut self, adj: &[u64], remaining: u64, current_max_bag: usize, order: &mut Vec<usize>) {
        if self.exhausted {
            return;
        }
        if self.budget == 0 {
            self.exhausted = true;
            return;
        }
        self.budget -= 1;

        if remaining == 0 {
            if current_max_bag < self.best_bag {
                self.best_bag = current_max_bag;
                *self.best_order = Some(order.clone());
            }
            return;
        }

        // Bags on this branch may not reach the incumbent's max bag, and
        // must respect the requested width.
        let bound = self.max_allowed_bag.min(self.best_bag.saturating_sub(1));
        if current_max_bag > bound {
            return;
        }
        // Any completion eliminates some first vertex whose bag is its
        // degree + 1, so the degeneracy of the remaining graph bounds every
        // completion from below.
        if degeneracy(adj, remaining) + 1 > bound {
            return;
        }

        // Simplicial vertices are safe to eliminate first: their closed
        // neighborhood is a clique and must share a bag anyway. By the same
        // token, a simplicial vertex whose bag exceeds the allowance kills
        // the whole state.
        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let nv = adj[v] & remaining;
            if is_clique(adj, nv) {
                let bag = nv.count_ones() as usize + 1;
                if bag <= bound {
                    order.push(v);
                    let next = eliminate(adj, remaining, v);
                    self.dfs(&next, remaining & !(1u64 << v), current_max_bag.max(bag), order);
                    order.pop();
                }
                return;
            }
        }

        let mut bits = remaining;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let bag = (adj[v] & remaining).count_ones() as usize + 1;
            let bound_now = self.max_allowed_bag.min(self.best_bag.saturating_sub(1));
            if bag > bound_now {
                continue;
            }
            order.push(v);
            let next = eliminate(adj, remaining, v);
            self.dfs(&next, remaining & !(1u64 << v), current_max_bag.max(bag), order);
            order.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

fn eliminate(adj: &[u64], remaining: u64, v: usize) -> Vec<u64> {
    let mut next = adj.to_vec();
    let nv = adj[v] & remaining & !(1u64 << v);
    let mut bits = nv;
    while bits != 0 {
        let u = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        next[u] |= nv & !(1u64 << u);
        next[u] &= !(1u64 << v);
    }
    next[v] = 0;
    next
}

fn is_clique(adj: &[u64], set: u64) -> bool {
    let mut bits = set;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if adj[v] & set & !(1u64 << v) != set & !(1u64 << v) {
            return false;
        }
    }
    true
}

fn greedy_clique_size(adj: &[u64], full: u64) -> usize {
    let mut best = 0;
    let mut seeds = full;
    while seeds != 0 {
        let s = seeds.trailing_zeros() as usize;
        seeds &= seeds - 1;
        let mut clique = 1u64 << s;
        let mut candidates = adj[s] & full;
        while candidates != 0 {
            // Pick the candidate with most neighbors among the candidates.
            let mut pick = usize::MAX;
            let mut pick_deg = 0;
            let mut bits = candidates;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let d = (adj[v] & candidates).count_ones() as usize;
                if pick == usize::MAX || d > pick_deg {
                    pick = v;
                    pick_deg = d;
                }
            }
            clique |= 1u64 << pick;
            candidates &= adj[pick] & !(1u64 << pick);
        }
        best = best.max(clique.count_ones() as usize);
    }
    best
}

fn degeneracy(adj: &[u64], remaining: u64) -> usize {
    let mut left = remaining;
    let mut degen = 0;
    while left != 0 {
        let mut min_v = usize::MAX;
        let mut min_d = usize::MAX;
        let mut bits = left;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let d = (adj[v] & left).count_ones() as usize;
            if d < min_d {
                min_d = d;
                min_v = v;
            }
        }
        degen = degen.max(min_d);
        left &= !(1u64 << min_v);
    }
    degen
}
