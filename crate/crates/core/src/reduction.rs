//! Parameterized reduction from Independent Set to 0-1 timed matching.
//!
//! A static graph on `n` vertices becomes a temporal star on `n + 1`
//! vertices centered at a fresh hub: every source vertex `v` gets one edge
//! to the hub. Each static edge is labeled with a distinct integer, and the
//! temporal edge of `v` carries one unit interval per incident label;
//! isolated vertices get their own labels past the edge range. Two star
//! edges then overlap exactly when their source vertices are adjacent, so
//! independent sets and timed matchings correspond one-to-one.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::StaticGraph;
use crate::temporal::{EdgeId, TemporalGraph, Timestep};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("unknown source vertex {0}")]
    UnknownVertex(usize),
    #[error("vertices {0} and {1} are adjacent in the source graph")]
    NotIndependent(usize, usize),
    #[error("unknown temporal edge id {0}")]
    UnknownEdge(usize),
    #[error("edges {0} and {1} overlap: not a 0-1 timed matching")]
    NotAMatching(usize, usize),
}

/// The temporal star produced from a static graph, plus the labels needed
/// to invert the construction. Temporal edge ids equal source vertex ids.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedInstance<W> {
    pub temporal: TemporalGraph<W>,
    /// Static edge `(u, v)` with `u < v` → its distinct label in `0..m`.
    pub edge_labels: BTreeMap<(usize, usize), Timestep>,
    /// Zero-degree source vertex → its distinct label in `m..m + n_0`.
    pub isolated_labels: BTreeMap<usize, Timestep>,
    /// The solution-size parameter, forwarded unchanged.
    pub k_prime: usize,
}

impl<W: Weight> ReducedInstance<W> {
    /// Number of vertices of the source graph.
    pub fn n_source_vertices(&self) -> usize {
        self.temporal.n_vertices() - 1
    }

    /// The hub vertex all temporal edges attach to.
    pub fn hub_vertex(&self) -> usize {
        self.temporal.n_vertices() - 1
    }

    fn check_source_vertex(&self, v: usize) -> Result<(), ReductionError> {
        if v >= self.n_source_vertices() {
            return Err(ReductionError::UnknownVertex(v));
        }
        Ok(())
    }

    /// Maps an independent set of source vertices to the matching of their
    /// star edges. Independence is checked against the edge labels.
    pub fn to_matching(&self, independent: &[usize]) -> Result<Vec<EdgeId>, ReductionError> {
        let mut vs: Vec<usize> = independent.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            self.check_source_vertex(v)?;
        }
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.edge_labels.contains_key(&(a, b)) {
                    return Err(ReductionError::NotIndependent(a, b));
                }
            }
        }
        // Edge ids equal source vertex ids by construction.
        Ok(vs)
    }

    /// Maps a 0-1 timed matching of the star back to the independent set of
    /// source vertices it selects.
    pub fn to_independent_set(&self, matching: &[EdgeId]) -> Result<Vec<usize>, ReductionError> {
        let mut ids: Vec<EdgeId> = matching.to_vec();
        ids.sort_unstable();
        ids.dedup();
        for &id in &ids {
            if id >= self.temporal.n_edges() {
                return Err(ReductionError::UnknownEdge(id));
            }
        }
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if crate::temporal::edges_overlap(&self.temporal.edges()[a], &self.temporal.edges()[b]) {
                    return Err(ReductionError::NotAMatching(a, b));
                }
            }
        }
        Ok(ids)
    }

    /// Label sidecar: everything needed to invert the construction.
    pub fn sidecar_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("k {}\n", self.k_prime));
        out.push_str(&format!("hub {}\n", self.hub_vertex()));
        for (&(u, v), &label) in &self.edge_labels {
            out.push_str(&format!("edge {} {} {}\n", u, v, label));
        }
        for (&v, &label) in &self.isolated_labels {
            out.push_str(&format!("isolated {} {}\n", v, label));
        }
        out
    }
}

/// Builds the reduced instance for `(g, k)`.
///
/// Labels are assigned canonically: static edges in `(u, v)` order receive
/// `0..m`, isolated vertices in ascending id order receive `m..m + n_0`.
/// All temporal edges carry unit weight; the lifetime is `m + n_0`.
pub fn reduce_independent_set<W: Weight>(g: &StaticGraph<W>, k: usize) -> ReducedInstance<W> {
    let n = g.n_vertices();
    let mut edge_labels = BTreeMap::new();
    for (label, (u, v)) in g.edges().enumerate() {
        edge_labels.insert((u, v), label as Timestep);
    }
    let m = g.n_edges() as Timestep;

    let mut isolated_labels = BTreeMap::new();
    let mut next = m;
    for v in 0..n {
        if g.degree(v) == 0 {
            isolated_labels.insert(v, next);
            next += 1;
        }
    }
    let lifetime = next;

    let hub = n;
    let mut builder = TemporalGraph::builder(n + 1, lifetime);
    for v in 0..n {
        let intervals: Vec<(Timestep, Timestep)> = if g.degree(v) == 0 {
            let label = isolated_labels[&v];
            vec![(label, label + 1)]
        } else {
            g.neighbors(v)
                .iter()
                .map(|&u| {
                    let label = edge_labels[&(v.min(u), v.max(u))];
                    (label, label + 1)
                })
                .collect()
        };
        builder
            .add_edge(v, hub, W::one(), intervals)
            .expect("construction yields valid edges");
    }

    ReducedInstance {
        temporal: builder.build(),
        edge_labels,
        isolated_labels,
        k_prime: k,
    }
}
