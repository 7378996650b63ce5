//! Tree decompositions of static graphs: elimination-ordering heuristics,
//! an exact branch-and-bound search for small graphs, conversion to nice
//! form, validation, and the constructive lift from a decomposition of the
//! underlying graph to one of the edge-overlap graph.

mod exact;
mod heuristic;
mod nice;

pub use exact::{decompose_exact, ExactResult};
pub use heuristic::{decompose_heuristic, EliminationStrategy};
pub use nice::{make_nice, NiceNode, NiceTreeDecomposition, NodeKind};

use thiserror::Error;

use crate::error::ParseError;
use crate::graph::StaticGraph;
use crate::overlap::OverlapGraph;
use crate::temporal::TemporalGraph;
use crate::weight::Weight;

/// A tree of bags over the vertices of a target graph. Bags are sorted
/// vertex lists; nodes are indices into `bags`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    neighbors: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn new() -> Self {
        TreeDecomposition {
            bags: Vec::new(),
            neighbors: Vec::new(),
        }
    }

    /// Adds a bag and returns its node id. The bag is sorted and deduped.
    pub fn add_bag(&mut self, mut bag: Vec<usize>) -> usize {
        bag.sort_unstable();
        bag.dedup();
        self.bags.push(bag);
        self.neighbors.push(Vec::new());
        self.bags.len() - 1
    }

    /// Connects two nodes. Neighbor lists stay sorted, so structurally
    /// equal decompositions compare equal regardless of insertion order.
    pub fn add_tree_edge(&mut self, a: usize, b: usize) {
        if let Err(pos) = self.neighbors[a].binary_search(&b) {
            self.neighbors[a].insert(pos, b);
        }
        if let Err(pos) = self.neighbors[b].binary_search(&a) {
            self.neighbors[b].insert(pos, a);
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.neighbors[node]
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    /// `max bag size - 1`, saturating at zero for decompositions whose bags
    /// are all empty.
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// PACE-style text: `s td <#bags> <max bag size> <#vertices>` followed
    /// by `b` lines and tree edges. Bag ids and vertices are 1-based on the
    /// wire.
    pub fn to_pace(&self, n_vertices: usize) -> String {
        let mut out = format!(
            "s td {} {} {}\n",
            self.n_nodes(),
            self.max_bag_size(),
            n_vertices
        );
        for (i, bag) in self.bags.iter().enumerate() {
            out.push_str(&format!("b {}", i + 1));
            for &v in bag {
                out.push_str(&format!(" {}", v + 1));
            }
            out.push('\n');
        }
        for (a, ns) in self.neighbors.iter().enumerate() {
            for &b in ns {
                if a < b {
                    out.push_str(&format!("{} {}\n", a + 1, b + 1));
                }
            }
        }
        out
    }

    /// Parses the PACE-style format written by [`Self::to_pace`]. Returns
    /// the decomposition and the declared vertex count of the target graph.
    pub fn parse_pace(text: &str) -> Result<(Self, usize), ParseError> {
        let mut td = TreeDecomposition::new();
        let mut declared: Option<(usize, usize)> = None; // (#bags, n_vertices)
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "s" {
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(ParseError::syntax(line_no, 1, "expected `s td <bags> <size> <n>`"));
                }
                let bags: usize = toks[2].parse().map_err(|_| {
                    ParseError::syntax(line_no, 1, "invalid bag count")
                })?;
                let n: usize = toks[4].parse().map_err(|_| {
                    ParseError::syntax(line_no, 1, "invalid vertex count")
                })?;
                declared = Some((bags, n));
            } else if toks[0] == "b" {
                if declared.is_none() {
                    return Err(ParseError::syntax(line_no, 1, "`b` line before `s td` header"));
                }
                if toks.len() < 2 {
                    return Err(ParseError::syntax(line_no, 1, "bag line missing id"));
                }
                let id: usize = toks[1].parse().map_err(|_| {
                    ParseError::syntax(line_no, 1, "invalid bag id")
                })?;
                if id != td.n_nodes() + 1 {
                    return Err(ParseError::syntax(
                        line_no,
                        1,
                        format!("bag ids must be consecutive; expected {}", td.n_nodes() + 1),
                    ));
                }
                let mut bag = Vec::with_capacity(toks.len() - 2);
                for t in &toks[2..] {
                    let v: usize = t.parse().map_err(|_| {
                        ParseError::syntax(line_no, 1, format!("invalid vertex `{}`", t))
                    })?;
                    if v == 0 {
                        return Err(ParseError::syntax(line_no, 1, "vertices are 1-based"));
                    }
                    bag.push(v - 1);
                }
                td.add_bag(bag);
            } else {
                if toks.len() != 2 {
                    return Err(ParseError::syntax(line_no, 1, "expected tree edge `<a> <b>`"));
                }
                let a: usize = toks[0].parse().map_err(|_| {
                    ParseError::syntax(line_no, 1, "invalid tree edge endpoint")
                })?;
                let b: usize = toks[1].parse().map_err(|_| {
                    ParseError::syntax(line_no, 1, "invalid tree edge endpoint")
                })?;
                if a == 0 || b == 0 {
                    return Err(ParseError::syntax(line_no, 1, "bag ids are 1-based"));
                }
                edges.push((a - 1, b - 1));
            }
        }
        let (bags, n) =
            declared.ok_or_else(|| ParseError::syntax(0, 0, "missing `s td` header"))?;
        if bags != td.n_nodes() {
            return Err(ParseError::syntax(
                0,
                0,
                format!("header declares {} bags, found {}", bags, td.n_nodes()),
            ));
        }
        for (a, b) in edges {
            if a >= td.n_nodes() || b >= td.n_nodes() {
                return Err(ParseError::syntax(0, 0, "tree edge references unknown bag"));
            }
            td.add_tree_edge(a, b);
        }
        Ok((td, n))
    }
}

impl Default for TreeDecomposition {
    fn default() -> Self {
        Self::new()
    }
}

/// A single violated decomposition invariant, named so failures are
/// actionable in tests and diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotATree { reason: String },
    BagVertexOutOfRange { node: usize, vertex: usize },
    VertexNotCovered { vertex: usize },
    EdgeNotCovered { u: usize, v: usize },
    VertexDisconnected { vertex: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotATree { reason } => write!(f, "node graph is not a tree: {}", reason),
            Violation::BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {} contains out-of-range vertex {}", node, vertex)
            }
            Violation::VertexNotCovered { vertex } => {
                write!(f, "vertex {} appears in no bag", vertex)
            }
            Violation::EdgeNotCovered { u, v } => {
                write!(f, "no bag contains both endpoints of edge ({}, {})", u, v)
            }
            Violation::VertexDisconnected { vertex } => {
                write!(f, "bags containing vertex {} do not form a subtree", vertex)
            }
        }
    }
}

/// Checks the three decomposition invariants of `td` against `g`. Returns
/// an empty list iff `td` is a valid tree decomposition of `g`.
pub fn validate_decomposition<W: Weight>(
    td: &TreeDecomposition,
    g: &StaticGraph<W>,
) -> Vec<Violation> {
    let mut violations = Vec::new();
    let n_nodes = td.n_nodes();

    let mut is_tree = true;
    if n_nodes == 0 {
        violations.push(Violation::NotATree {
            reason: "decomposition has no nodes".to_string(),
        });
        is_tree = false;
    } else {
        let edge_count: usize = td.neighbors.iter().map(|ns| ns.len()).sum::<usize>() / 2;
        let mut seen = vec![false; n_nodes];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop() {
            for &y in td.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push(y);
                }
            }
        }
        if reached != n_nodes {
            violations.push(Violation::NotATree {
                reason: format!("{} of {} nodes reachable from node 0", reached, n_nodes),
            });
            is_tree = false;
        } else if edge_count != n_nodes - 1 {
            violations.push(Violation::NotATree {
                reason: format!("{} tree edges for {} nodes", edge_count, n_nodes),
            });
            is_tree = false;
        }
    }

    // Bag contents and per-vertex bag lists.
    let n = g.n_vertices();
    let mut bags_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                violations.push(Violation::BagVertexOutOfRange { node, vertex: v });
            } else {
                bags_of[v].push(node);
            }
        }
    }

    for (v, nodes) in bags_of.iter().enumerate() {
        if nodes.is_empty() {
            violations.push(Violation::VertexNotCovered { vertex: v });
        }
    }

    for (u, v) in g.edges() {
        let covered = bags_of[u]
            .iter()
            .any(|&node| td.bags[node].binary_search(&v).is_ok());
        if !covered {
            violations.push(Violation::EdgeNotCovered { u, v });
        }
    }

    // Connectivity of the bags containing each vertex, meaningful only when
    // the node graph is a tree.
    if is_tree {
        for (v, nodes) in bags_of.iter().enumerate() {
            if nodes.len() <= 1 {
                continue;
            }
            let member = |x: usize| td.bags[x].binary_search(&v).is_ok();
            let mut seen = vec![false; n_nodes];
            let mut queue = vec![nodes[0]];
            seen[nodes[0]] = true;
            let mut reached = 1;
            while let Some(x) = queue.pop() {
                for &y in td.neighbors(x) {
                    if !seen[y] && member(y) {
                        seen[y] = true;
                        reached += 1;
                        queue.push(y);
                    }
                }
            }
            if reached != nodes.len() {
                violations.push(Violation::VertexDisconnected { vertex: v });
            }
        }
    }

    violations
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LiftError {
    #[error("decomposition is not valid for the underlying graph ({0} violations)")]
    InvalidUnderlyingDecomposition(usize),
    #[error("overlap graph does not belong to the temporal graph")]
    MismatchedOverlapGraph,
}

/// Lifts a decomposition of the underlying graph to one of the overlap
/// graph by replacing every vertex in every bag with the overlap vertices
/// of its incident temporal edges. The overlap graph is a subgraph of the
/// line graph of the underlying graph, so the result is a valid
/// decomposition of it, and its max bag size is at most
/// `max bag size of td_u × max degree of the underlying graph`.
pub fn lift_decomposition<W: Weight>(
    td_u: &TreeDecomposition,
    g: &TemporalGraph<W>,
    og: &OverlapGraph<W>,
) -> Result<TreeDecomposition, LiftError> {
    if og.n_vertices() != g.n_edges() {
        return Err(LiftError::MismatchedOverlapGraph);
    }
    let underlying = g.underlying_graph();
    let violations = validate_decomposition(td_u, &underlying);
    if !violations.is_empty() {
        return Err(LiftError::InvalidUnderlyingDecomposition(violations.len()));
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n_vertices()];
    for e in g.edges() {
        incident[e.u].push(e.id);
        incident[e.v].push(e.id);
    }

    let mut lifted = TreeDecomposition::new();
    for bag in td_u.bags() {
        let mut new_bag = Vec::new();
        for &v in bag {
            new_bag.extend_from_slice(&incident[v]);
        }
        lifted.add_bag(new_bag);
    }
    for (a, ns) in td_u.neighbors.iter().enumerate() {
        for &b in ns {
            if a < b {
                lifted.add_tree_edge(a, b);
            }
        }
    }
    Ok(lifted)
}
