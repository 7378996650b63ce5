//! The edge-overlap graph of a temporal graph: one weighted vertex per
//! temporal edge, with an edge between two vertices whenever the temporal
//! edges overlap. Independent sets of this graph correspond
//! weight-preservingly to 0-1 timed matchings.

use thiserror::Error;

use crate::graph::StaticGraph;
use crate::temporal::{edges_overlap, EdgeId, TemporalGraph, TimedMatching};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OverlapError {
    #[error("vertices {0} and {1} are adjacent: the set is not independent")]
    NotIndependent(usize, usize),
    #[error("unknown overlap vertex {0}")]
    UnknownVertex(usize),
}

/// Vertex-weighted static graph over the temporal edges, with the
/// edge-to-vertex maps in both directions. Vertex ids equal temporal edge
/// ids, which makes the correspondence an identity map.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapGraph<W> {
    pub graph: StaticGraph<W>,
    edge_of_vertex: Vec<EdgeId>,
    vertex_of_edge: Vec<usize>,
}

impl<W: Weight> OverlapGraph<W> {
    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn n_edges(&self) -> usize {
        self.graph.n_edges()
    }

    pub fn edge_of_vertex(&self, vertex: usize) -> Result<EdgeId, OverlapError> {
        self.edge_of_vertex
            .get(vertex)
            .copied()
            .ok_or(OverlapError::UnknownVertex(vertex))
    }

    pub fn vertex_of_edge(&self, edge: EdgeId) -> Result<usize, OverlapError> {
        self.vertex_of_edge
            .get(edge)
            .copied()
            .ok_or(OverlapError::UnknownVertex(edge))
    }

    /// Maps an independent set of overlap vertices to the corresponding
    /// timed matching. The independence of the input is re-checked.
    pub fn matching_from_independent_set(
        &self,
        vertices: &[usize],
    ) -> Result<TimedMatching<W>, OverlapError> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            if v >= self.n_vertices() {
                return Err(OverlapError::UnknownVertex(v));
            }
        }
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if self.graph.has_edge(a, b) {
                    return Err(OverlapError::NotIndependent(a, b));
                }
            }
        }
        let total = vs
            .iter()
            .fold(W::zero(), |acc, &v| acc + self.graph.vertex_weight(v));
        let edge_ids: Vec<EdgeId> = vs.iter().map(|&v| self.edge_of_vertex[v]).collect();
        Ok(TimedMatching {
            edge_ids,
            total_weight: total,
        })
    }

    /// Export in the static-graph text format: `<n> <m>` header, `v`
    /// lines carrying vertex weights, then `e` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n_vertices(), self.n_edges());
        for v in 0..self.n_vertices() {
            out.push_str(&format!("v {} {}\n", v, self.graph.vertex_weight(v)));
        }
        for (a, b) in self.graph.edges() {
            out.push_str(&format!("e {} {}\n", a, b));
        }
        out
    }
}

/// Builds the edge-overlap graph by checking, for each vertex of the
/// temporal graph, every pair of incident edges. Two distinct temporal
/// edges share at most one endpoint, so each candidate pair is tested at
/// exactly one vertex; the edge set dedupes regardless.
pub fn build_overlap_graph<W: Weight>(g: &TemporalGraph<W>) -> OverlapGraph<W> {
    let m = g.n_edges();
    let mut og = StaticGraph::new(m);
    og.set_vertex_weights(g.edges().iter().map(|e| e.weight).collect())
        .expect("edge weights validated at construction");

    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n_vertices()];
    for e in g.edges() {
        incident[e.u].push(e.id);
        incident[e.v].push(e.id);
    }
    for edges in &incident {
        for (i, &a) in edges.iter().enumerate() {
            for &b in &edges[i + 1..] {
                if !og.has_edge(a, b) && edges_overlap(&g.edges()[a], &g.edges()[b]) {
                    og.add_edge(a, b).expect("distinct edge ids");
                }
            }
        }
    }

    OverlapGraph {
        graph: og,
        edge_of_vertex: (0..m).collect(),
        vertex_of_edge: (0..m).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::TemporalGraph;

    #[test]
    fn two_overlapping_edges() {
        let mut b = TemporalGraph::builder(4, 4);
        b.add_edge(0, 2, 1.5, vec![(2, 3)]).unwrap();
        b.add_edge(2, 3, 2.0, vec![(2, 4)]).unwrap();
        let og = build_overlap_graph(&b.build());
        assert_eq!(og.n_vertices(), 2);
        assert_eq!(og.n_edges(), 1);
        assert_eq!(og.graph.vertex_weight(0), 1.5);
    }

    #[test]
    fn empty_graph() {
        let g: TemporalGraph<f64> = TemporalGraph::empty(5, 3);
        let og = build_overlap_graph(&g);
        assert_eq!(og.n_vertices(), 0);
        assert_eq!(og.n_edges(), 0);
    }

    #[test]
    fn star_with_disjoint_intervals() {
        let mut b = TemporalGraph::builder(4, 3);
        b.add_edge(0, 1, 1.0, vec![(0, 1)]).unwrap();
        b.add_edge(0, 2, 1.0, vec![(1, 2)]).unwrap();
        b.add_edge(0, 3, 1.0, vec![(2, 3)]).unwrap();
        let og = build_overlap_graph(&b.build());
        assert_eq!(og.n_vertices(), 3);
        assert_eq!(og.n_edges(), 0);
    }

    #[test]
    fn independent_set_maps_to_matching() {
        // Star with three pairwise-overlapping edges: the overlap graph is a
        // triangle, so only singleton independent sets exist.
        let mut b = TemporalGraph::builder(4, 4);
        b.add_edge(0, 1, 1.0, vec![(0, 2)]).unwrap();
        b.add_edge(0, 2, 2.0, vec![(1, 3)]).unwrap();
        b.add_edge(0, 3, 3.0, vec![(1, 2)]).unwrap();
        let g = b.build();
        let og = build_overlap_graph(&g);
        assert_eq!(og.n_edges(), 3);

        let empty = og.matching_from_independent_set(&[]).unwrap();
        assert_eq!(empty, TimedMatching::empty());

        let single = og.matching_from_independent_set(&[2]).unwrap();
        assert_eq!(single.edge_ids, vec![2]);
        assert_eq!(single.total_weight, 3.0);
        assert!(g.verify_matching(&single.edge_ids).unwrap());

        assert_eq!(
            og.matching_from_independent_set(&[0, 1]),
            Err(OverlapError::NotIndependent(0, 1))
        );
    }

    #[test]
    fn export_format() {
        let mut b = TemporalGraph::builder(3, 2);
        b.add_edge(0, 1, 0.5, vec![(0, 1)]).unwrap();
        b.add_edge(1, 2, 1.0, vec![(0, 2)]).unwrap();
        let og = build_overlap_graph(&b.build());
        assert_eq!(og.to_text(), "2 1\nv 0 0.5\nv 1 1\ne 0 1\n");
    }
}
