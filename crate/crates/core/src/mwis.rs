//! Maximum weight independent set on a vertex-weighted static graph: a
//! dynamic program over a nice tree decomposition, and an exhaustive oracle
//! for small graphs.
//!
//! Tables are indexed by bitmasks over bag positions; a mask has an entry
//! exactly when the corresponding bag subset is independent. Each entry
//! carries the best achievable weight for the node's subtree together with
//! the witness set itself, so ties resolve to the lexicographically
//! smallest solution and the root entry is the final answer without a
//! separate reconstruction pass. Child tables are dropped as soon as the
//! parent is computed, keeping at most one table per tree level alive.
//!
//! With strictly positive weights the tie-breaking provably agrees with
//! [`brute_force`]'s global lexicographic choice (equal-weight candidates
//! can never nest, making the order compositional across subtrees).
//! Zero-weight vertices keep both solvers deterministic but may make them
//! pick different equal-weight optima.

use thiserror::Error;

use crate::graph::StaticGraph;
use crate::lexset;
use crate::treedec::{validate_decomposition, NiceTreeDecomposition, NodeKind, Violation};
use crate::weight::Weight;

pub const BRUTE_FORCE_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq)]
pub struct MwisSolution<W> {
    pub weight: W,
    /// Sorted vertex ids of an independent set achieving `weight`.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MwisError {
    #[error("decomposition is not valid for the graph: {0:?}")]
    InvalidDecomposition(Vec<Violation>),
    #[error("nice decomposition is malformed: {0}")]
    MalformedNice(String),
    #[error("graph has {n} vertices; brute force supports at most {max}")]
    TooLarge { n: usize, max: usize },
}

struct Entry<W> {
    weight: W,
    set: Box<[u64]>,
}

impl<W: Weight> Entry<W> {
    /// Strictly better under the solver order: larger weight, then
    /// lexicographically smaller vertex set.
    fn beats(&self, other: &Entry<W>) -> bool {
        if self.weight != other.weight {
            return self.weight > other.weight;
        }
        lexset::lex_less(&self.set, &other.set)
    }
}

type Table<W> = Vec<Option<Entry<W>>>;

/// Maximum weight independent set via dynamic programming over `ntd`.
///
/// The decomposition is validated against `g` first. Transitions follow the
/// standard node kinds: a Leaf holds the empty set; Introduce extends
/// entries whose subset stays independent; Forget keeps the better of the
/// child entries with and without the vertex; Join adds the two child
/// weights and subtracts the shared bag subset's weight.
pub fn tree_dp<W: Weight>(
    g: &StaticGraph<W>,
    ntd: &NiceTreeDecomposition,
) -> Result<MwisSolution<W>, MwisError> {
    ntd.validate_structure().map_err(MwisError::MalformedNice)?;
    let violations = validate_decomposition(&ntd.as_tree_decomposition(), g);
    if !violations.is_empty() {
        return Err(MwisError::InvalidDecomposition(violations));
    }

    let words = lexset::words_for(g.n_vertices());
    let mut tables: Vec<Option<Table<W>>> = (0..ntd.n_nodes()).map(|_| None).collect();

    for &t in &ntd.post_order() {
        let node = ntd.node(t);
        let bag = &node.bag;
        let table = match node.kind {
            NodeKind::Leaf => vec![Some(Entry {
                weight: W::zero(),
                set: lexset::empty(words),
            })],
            NodeKind::Introduce { vertex } => {
                let child = tables[node.children[0]].take().expect("child computed");
                let p = bag.binary_search(&vertex).expect("vertex in bag");
                let low_mask = (1usize << p) - 1;
                let nbr_mask: usize = bag
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| u != vertex && g.has_edge(u, vertex))
                    .fold(0, |m, (i, _)| m | (1 << i));
                let w_v = g.vertex_weight(vertex);

                let mut table: Table<W> = Vec::with_capacity(1 << bag.len());
                for mask in 0..1usize << bag.len() {
                    let child_mask = (mask >> (p + 1)) << p | (mask & low_mask);
                    let entry = if mask & (1 << p) == 0 {
                        child[child_mask].as_ref().map(|e| Entry {
                            weight: e.weight,
                            set: e.set.clone(),
                        })
                    } else if mask & nbr_mask == 0 {
                        child[child_mask].as_ref().map(|e| Entry {
                            weight: e.weight + w_v,
                            set: lexset::with_bit(&e.set, vertex),
                        })
                    } else {
                        None
                    };
                    table.push(entry);
                }
                table
            }
            NodeKind::Forget { vertex } => {
                let child_idx = node.children[0];
                let p = ntd
                    .node(child_idx)
                    .bag
                    .binary_search(&vertex)
                    .expect("vertex in child bag");
                let mut child = tables[child_idx].take().expect("child computed");
                let low_mask = (1usize << p) - 1;

                let mut table: Table<W> = Vec::with_capacity(1 << bag.len());
                for mask in 0..1usize << bag.len() {
                    let without = (mask & low_mask) | ((mask >> p) << (p + 1));
                    let with = without | (1 << p);
                    let e0 = child[without].take();
                    let e1 = child[with].take();
                    let entry = match (e0, e1) {
                        (Some(a), Some(b)) => Some(if b.beats(&a) { b } else { a }),
                        (Some(a), None) => Some(a),
                        (None, Some(b)) => Some(b),
                        (None, None) => None,
                    };
                    table.push(entry);
                }
                table
            }
            NodeKind::Join => {
                let left = tables[node.children[0]].take().expect("child computed");
                let right = tables[node.children[1]].take().expect("child computed");
                let bag_weights: Vec<W> = bag.iter().map(|&v| g.vertex_weight(v)).collect();

                let mut table: Table<W> = Vec::with_capacity(1 << bag.len());
                for mask in 0..1usize << bag.len() {
                    let entry = match (&left[mask], &right[mask]) {
                        (Some(a), Some(b)) => {
                            let mut shared = W::zero();
                            for (i, &w) in bag_weights.iter().enumerate() {
                                if mask & (1 << i) != 0 {
                                    shared = shared + w;
                                }
                            }
                            Some(Entry {
                                weight: a.weight + b.weight - shared,
                                set: lexset::union(&a.set, &b.set),
                            })
                        }
                        _ => None,
                    };
                    table.push(entry);
                }
                table
            }
        };
        debug_assert!(table.len() <= 1 << (ntd.max_bag_size()));
        tables[t] = Some(table);
    }

    let root_table = tables[ntd.root()].take().expect("root computed");
    let answer = root_table
        .into_iter()
        .next()
        .flatten()
        .expect("empty set is always independent");
    Ok(MwisSolution {
        weight: answer.weight,
        vertices: lexset::to_sorted_ids(&answer.set),
    })
}

/// Exhaustive maximum over all vertex subsets, with the same weight-then-
/// lexicographic tie-breaking as [`tree_dp`]. Limited to
/// [`BRUTE_FORCE_MAX_VERTICES`] vertices.
pub fn brute_force<W: Weight>(g: &StaticGraph<W>) -> Result<MwisSolution<W>, MwisError> {
    let n = g.n_vertices();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(MwisError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1u64 << u)))
        .collect();

    let mut best_mask = 0u64;
    let mut best_weight = W::zero();
    for mask in 0u64..1u64 << n {
        let mut independent = true;
        let mut weight = W::zero();
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
            weight = weight + g.vertex_weight(v);
        }
        if !independent {
            continue;
        }
        if weight > best_weight
            || (weight == best_weight && lexset::lex_less(&[mask], &[best_mask]))
        {
            best_weight = weight;
            best_mask = mask;
        }
    }
    Ok(MwisSolution {
        weight: best_weight,
        vertices: lexset::to_sorted_ids(&[best_mask]),
    })
}
