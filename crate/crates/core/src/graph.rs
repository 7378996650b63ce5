//! Static undirected graphs with optional vertex weights.
//!
//! Houses the underlying graph of a temporal graph, the edge-overlap graph,
//! and the inputs of the independent-set reduction. Edges are stored
//! normalized (`u < v`) and iterate in canonical order.

use std::collections::BTreeSet;

use crate::error::{GraphError, ParseError};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq)]
pub struct StaticGraph<W> {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    vertex_weights: Vec<W>,
}

impl<W: Weight> StaticGraph<W> {
    /// An edgeless graph on `n` vertices with unit vertex weights.
    pub fn new(n_vertices: usize) -> Self {
        StaticGraph {
            n_vertices,
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); n_vertices],
            vertex_weights: vec![W::one(); n_vertices],
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Inserts the undirected edge `{u, v}`. Self-loops, duplicates, and
    /// out-of-range endpoints are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for &x in &[u, v] {
            if x >= self.n_vertices {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    n_vertices: self.n_vertices,
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        let iu = self.adjacency[u].binary_search(&v).unwrap_err();
        self.adjacency[u].insert(iu, v);
        let iv = self.adjacency[v].binary_search(&u).unwrap_err();
        self.adjacency[v].insert(iv, u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        if !self.edges.remove(&key) {
            return false;
        }
        self.adjacency[u].retain(|&x| x != v);
        self.adjacency[v].retain(|&x| x != u);
        true
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n_vertices).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges in canonical `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_weight(&self, v: usize) -> W {
        self.vertex_weights[v]
    }

    pub fn vertex_weights(&self) -> &[W] {
        &self.vertex_weights
    }

    /// Replaces all vertex weights. Each weight must be finite and
    /// non-negative, and the vector must cover every vertex.
    pub fn set_vertex_weights(&mut self, weights: Vec<W>) -> Result<(), GraphError> {
        if weights.len() != self.n_vertices {
            return Err(GraphError::WeightCountMismatch {
                expected: self.n_vertices,
                got: weights.len(),
            });
        }
        for &w in &weights {
            if !w.is_finite_value() {
                return Err(GraphError::NonFiniteWeight);
            }
            if w < W::zero() {
                return Err(GraphError::NegativeWeight);
            }
        }
        self.vertex_weights = weights;
        Ok(())
    }

    /// Parses the simple edge-list format: an optional `#` comment block, a
    /// line with the vertex count, then one `<u> <v>` line per edge.
    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut graph: Option<StaticGraph<W>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match graph {
                None => {
                    let n: usize = line.parse().map_err(|_| {
                        ParseError::syntax(line_no, 1, "expected vertex count")
                    })?;
                    graph = Some(StaticGraph::new(n));
                }
                Some(ref mut g) => {
                    let mut it = line.split_whitespace();
                    let u = parse_usize(&mut it, raw, line_no)?;
                    let v = parse_usize(&mut it, raw, line_no)?;
                    if it.next().is_some() {
                        return Err(ParseError::syntax(line_no, 1, "trailing tokens on edge line"));
                    }
                    g.add_edge(u, v)
                        .map_err(|source| ParseError::Graph { line: line_no, source })?;
                }
            }
        }
        graph.ok_or_else(|| ParseError::syntax(0, 0, "empty input: missing vertex count"))
    }

    /// Canonical edge-list serialization; inverse of [`Self::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n_vertices);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

fn parse_usize<'a>(
    it: &mut impl Iterator<Item = &'a str>,
    line: &str,
    line_no: usize,
) -> Result<usize, ParseError> {
    let tok = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, line.len() + 1, "expected vertex id"))?;
    tok.parse().map_err(|_| {
        let col = line.find(tok).map_or(1, |o| o + 1);
        ParseError::syntax(line_no, col, format!("invalid vertex id `{}`", tok))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_rejects_self_loop_and_duplicates() {
        let mut g: StaticGraph<f64> = StaticGraph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            g.add_edge(0, 7),
            Err(GraphError::VertexOutOfRange { vertex: 7, .. })
        ));
        assert_eq!(g.n_edges(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn edge_list_roundtrip() {
        let mut g: StaticGraph<f64> = StaticGraph::new(4);
        g.add_edge(2, 0).unwrap();
        g.add_edge(1, 3).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4\n0 2\n1 3\n");
        let h = StaticGraph::<f64>::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            StaticGraph::<f64>::parse_edge_list("3\n0 zero\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        let err = StaticGraph::<f64>::parse_edge_list("3\n2 2\n").unwrap_err();
        assert_eq!(err.graph_error(), Some(&GraphError::SelfLoop(2)));
    }

    #[test]
    fn weights_validation() {
        let mut g: StaticGraph<f64> = StaticGraph::new(2);
        assert_eq!(
            g.set_vertex_weights(vec![1.0, -0.5]),
            Err(GraphError::NegativeWeight)
        );
        assert_eq!(
            g.set_vertex_weights(vec![1.0, f64::NAN]),
            Err(GraphError::NonFiniteWeight)
        );
        g.set_vertex_weights(vec![0.25, 2.5]).unwrap();
        assert_eq!(g.vertex_weight(1), 2.5);
    }
}
