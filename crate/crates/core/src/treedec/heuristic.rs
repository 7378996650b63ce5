//! Elimination-ordering heuristics. Any elimination order yields a valid
//! tree decomposition whose width is an upper bound on the treewidth;
//! min-fill and min-degree are the standard orderings.

use std::collections::BTreeSet;

use super::TreeDecomposition;
use crate::graph::StaticGraph;
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EliminationStrategy {
    /// Eliminate the vertex whose neighborhood needs the fewest fill edges.
    MinFill,
    /// Eliminate the vertex of minimum current degree.
    MinDegree,
}

/// Computes a tree decomposition of `g` by eliminating vertices in the
/// order chosen by `strategy`. Ties break toward the smallest vertex id,
/// so the output is deterministic.
pub fn decompose_heuristic<W: Weight>(
    g: &StaticGraph<W>,
    strategy: EliminationStrategy,
) -> TreeDecomposition {
    let order = elimination_order(g, strategy);
    decomposition_from_order(g, &order)
}

fn elimination_order<W: Weight>(g: &StaticGraph<W>, strategy: EliminationStrategy) -> Vec<usize> {
    let n = g.n_vertices();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);

    while !alive.is_empty() {
        let pick = match strategy {
            EliminationStrategy::MinDegree => alive
                .iter()
                .copied()
                .min_by_key(|&v| (adj[v].len(), v))
                .unwrap(),
            EliminationStrategy::MinFill => alive
                .iter()
                .copied()
                .min_by_key(|&v| (fill_count(&adj, v), v))
                .unwrap(),
        };
        // Turn the neighborhood into a clique, then remove the vertex.
        let neighbors: Vec<usize> = adj[pick].iter().copied().collect();
        for (i, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &neighbors {
            adj[a].remove(&pick);
        }
        adj[pick].clear();
        alive.remove(&pick);
        order.push(pick);
    }
    order
}

fn fill_count(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let neighbors: Vec<usize> = adj[v].iter().copied().collect();
    let mut fill = 0;
    for (i, &a) in neighbors.iter().enumerate() {
        for &b in &neighbors[i + 1..] {
            if !adj[a].contains(&b) {
                fill += 1;
            }
        }
    }
    fill
}

/// Builds the tree decomposition induced by an elimination order: the bag
/// of a vertex is itself plus its neighborhood at elimination time, and it
/// hangs below the bag of the neighbor eliminated next. Component roots are
/// chained so the node graph is a single tree; an empty graph gets one
/// empty bag.
pub(crate) fn decomposition_from_order<W: Weight>(
    g: &StaticGraph<W>,
    order: &[usize],
) -> TreeDecomposition {
    let n = g.n_vertices();
    debug_assert_eq!(order.len(), n);
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();

    let mut td = TreeDecomposition::new();
    if n == 0 {
        td.add_bag(Vec::new());
        return td;
    }

    // parent_choice[i]: elimination position of the bag this one attaches to.
    let mut parent_choice: Vec<Option<usize>> = vec![None; n];
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let neighbors: Vec<usize> = adj[v].iter().copied().collect();
        let mut bag = neighbors.clone();
        bag.push(v);
        td.add_bag(bag);

        match neighbors.iter().map(|&u| position[u]).min() {
            Some(next) => parent_choice[i] = Some(next),
            None => roots.push(i),
        }

        for (a_idx, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[a_idx + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        for &a in &neighbors {
            adj[a].remove(&v);
        }
        adj[v].clear();
    }

    for (i, choice) in parent_choice.iter().enumerate() {
        if let Some(parent) = choice {
            td.add_tree_edge(i, *parent);
        }
    }
    for pair in roots.windows(2) {
        td.add_tree_edge(pair[0], pair[1]);
    }
    td
}
