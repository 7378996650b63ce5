//! Temporal graphs: vertices with weighted edges that exist during sorted,
//! pairwise-disjoint half-open time intervals.

use serde::Serialize;

use crate::error::{GraphError, ParseError};
use crate::graph::StaticGraph;
use crate::weight::Weight;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Timestep = u32;

/// Half-open interval `[start, finish)` of integer timesteps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: Timestep,
    pub finish: Timestep,
}

impl Interval {
    pub fn new(start: Timestep, finish: Timestep) -> Result<Self, GraphError> {
        if start >= finish {
            return Err(GraphError::EmptyInterval { start, finish });
        }
        Ok(Interval { start, finish })
    }

    /// Half-open intersection test; touching intervals do not intersect.
    pub fn intersects(self, other: Interval) -> bool {
        self.start < other.finish && other.start < self.finish
    }

    pub fn contains(self, t: Timestep) -> bool {
        self.start <= t && t < self.finish
    }
}

/// An undirected edge `{u, v}` with a non-negative weight, present during
/// each of its intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalEdge<W> {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub weight: W,
    pub intervals: Vec<Interval>,
}

impl<W: Weight> TemporalEdge<W> {
    /// True iff the edge exists at timestep `t`.
    pub fn active_at(&self, t: Timestep) -> bool {
        self.intervals.iter().any(|i| i.contains(t))
    }

    pub fn shares_endpoint(&self, other: &TemporalEdge<W>) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

/// Two temporal edges overlap iff they share an endpoint and are both
/// active at some timestep. Interval lists are sorted and disjoint, so a
/// two-pointer sweep decides existence of a common timestep.
pub fn edges_overlap<W: Weight>(e1: &TemporalEdge<W>, e2: &TemporalEdge<W>) -> bool {
    e1.shares_endpoint(e2) && intervals_intersect(&e1.intervals, &e2.intervals)
}

fn intervals_intersect(a: &[Interval], b: &[Interval]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i].intersects(b[j]) {
            return true;
        }
        if a[i].finish <= b[j].finish {
            i += 1;
        } else {
            j += 1;
        }
    }
    false
}

/// A set of pairwise non-overlapping temporal edges together with its
/// total weight.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimedMatching<W> {
    /// Sorted, deduplicated edge ids.
    pub edge_ids: Vec<EdgeId>,
    pub total_weight: W,
}

impl<W: Weight> TimedMatching<W> {
    pub fn empty() -> Self {
        TimedMatching {
            edge_ids: Vec::new(),
            total_weight: W::zero(),
        }
    }

    pub fn cardinality(&self) -> usize {
        self.edge_ids.len()
    }

    /// `weight <w>` line followed by one sorted `edge <u> <v>` line per
    /// matched edge.
    pub fn to_text(&self, graph: &TemporalGraph<W>) -> String {
        let mut out = format!("weight {}\n", self.total_weight);
        for &id in &self.edge_ids {
            let e = &graph.edges()[id];
            out.push_str(&format!("edge {} {}\n", e.u, e.v));
        }
        out
    }
}

/// A temporal graph: fixed vertex set `0..n`, lifetime `T` (valid timesteps
/// are `0..T`), and at most one temporal edge per vertex pair. Immutable
/// after construction; edges are sorted by `(u, v)` and ids are their
/// positions in that order.
#[derive(Debug, Clone, PartialEq)]
pub struct TemporalGraph<W> {
    n_vertices: usize,
    lifetime: Timestep,
    edges: Vec<TemporalEdge<W>>,
}

impl<W: Weight> TemporalGraph<W> {
    pub fn builder(n_vertices: usize, lifetime: Timestep) -> TemporalGraphBuilder<W> {
        TemporalGraphBuilder {
            n_vertices,
            lifetime,
            edges: Vec::new(),
        }
    }

    pub fn empty(n_vertices: usize, lifetime: Timestep) -> Self {
        TemporalGraph {
            n_vertices,
            lifetime,
            edges: Vec::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn lifetime(&self) -> Timestep {
        self.lifetime
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`; the index of an edge is its id.
    pub fn edges(&self) -> &[TemporalEdge<W>] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&TemporalEdge<W>, GraphError> {
        self.edges.get(id).ok_or(GraphError::UnknownEdgeId(id))
    }

    /// The static graph on the same vertex set with one edge per temporal
    /// edge. Vertex weights default to one.
    pub fn underlying_graph(&self) -> StaticGraph<W> {
        let mut g = StaticGraph::new(self.n_vertices);
        for e in &self.edges {
            g.add_edge(e.u, e.v).expect("edges validated at construction");
        }
        g
    }

    /// True iff every pair of the given edges is non-overlapping. Unknown
    /// ids are an error; duplicated ids are collapsed.
    pub fn verify_matching(&self, edge_ids: &[EdgeId]) -> Result<bool, GraphError> {
        let mut ids: Vec<EdgeId> = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        for &id in &ids {
            self.edge(id)?;
        }
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if edges_overlap(&self.edges[a], &self.edges[b]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The matching over the given ids with its total weight; errors if the
    /// ids are unknown or some pair overlaps.
    pub fn matching(&self, edge_ids: &[EdgeId]) -> Result<TimedMatching<W>, GraphError> {
        let mut ids: Vec<EdgeId> = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        for &id in &ids {
            self.edge(id)?;
        }
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                if edges_overlap(&self.edges[a], &self.edges[b]) {
                    return Err(GraphError::OverlappingEdges(a, b));
                }
            }
        }
        let total = ids
            .iter()
            .fold(W::zero(), |acc, &id| acc + self.edges[id].weight);
        Ok(TimedMatching {
            edge_ids: ids,
            total_weight: total,
        })
    }

    /// Same graph with every edge weight replaced by one.
    pub fn with_unit_weights(&self) -> TemporalGraph<W> {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = W::one();
        }
        g
    }

    /// Parses the temporal graph text format.
    ///
    /// Line 1 is `<n_vertices> <lifetime>`; every following non-comment line
    /// is `<u> <v> <weight> (s1,f1) (s2,f2) ...`. Lines starting with `#`
    /// are comments.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut builder: Option<TemporalGraphBuilder<W>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match builder {
                None => {
                    let mut it = line.split_whitespace();
                    let n = parse_header_number(&mut it, raw, line_no, "vertex count")?;
                    let lifetime = parse_header_number(&mut it, raw, line_no, "lifetime")?;
                    if it.next().is_some() {
                        return Err(ParseError::syntax(line_no, 1, "trailing tokens in header"));
                    }
                    builder = Some(TemporalGraph::builder(n as usize, lifetime));
                }
                Some(ref mut b) => parse_edge_line(b, raw, line_no)?,
            }
        }
        let builder = builder
            .ok_or_else(|| ParseError::syntax(0, 0, "empty input: missing header line"))?;
        Ok(builder.build())
    }

    /// Canonical serialization: header, then edges sorted by `(u, v)` with
    /// intervals sorted by start. `parse` of the output reproduces the graph
    /// exactly.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n_vertices, self.lifetime);
        for e in &self.edges {
            out.push_str(&format!("{} {} {}", e.u, e.v, e.weight));
            for iv in &e.intervals {
                out.push_str(&format!(" ({},{})", iv.start, iv.finish));
            }
            out.push('\n');
        }
        out
    }
}

/// Accumulates edges, validating each against the graph header; `build`
/// sorts them into canonical order and assigns ids.
pub struct TemporalGraphBuilder<W> {
    n_vertices: usize,
    lifetime: Timestep,
    edges: Vec<TemporalEdge<W>>,
}

impl<W: Weight> TemporalGraphBuilder<W> {
    /// Validates and stores one edge. Intervals may arrive unsorted; they
    /// are sorted here and must be pairwise disjoint (touching is fine).
    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: W,
        intervals: Vec<(Timestep, Timestep)>,
    ) -> Result<(), GraphError> {
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
        if !weight.is_finite_value() {
            return Err(GraphError::NonFiniteWeight);
        }
        if weight < W::zero() {
            return Err(GraphError::NegativeWeight);
        }
        if intervals.is_empty() {
            return Err(GraphError::NoIntervals);
        }
        let mut ivs = Vec::with_capacity(intervals.len());
        for (s, f) in intervals {
            let iv = Interval::new(s, f)?;
            if iv.finish > self.lifetime {
                return Err(GraphError::IntervalOutOfRange {
                    start: iv.start,
                    finish: iv.finish,
                    lifetime: self.lifetime,
                });
            }
            ivs.push(iv);
        }
        ivs.sort_unstable();
        for pair in ivs.windows(2) {
            if pair[0].intersects(pair[1]) {
                return Err(GraphError::OverlappingIntervals(
                    pair[0].start,
                    pair[0].finish,
                    pair[1].start,
                    pair[1].finish,
                ));
            }
        }
        let (a, b) = (u.min(v), u.max(v));
        if self.edges.iter().any(|e| e.u == a && e.v == b) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        self.edges.push(TemporalEdge {
            id: 0, // assigned in build
            u: a,
            v: b,
            weight,
            intervals: ivs,
        });
        Ok(())
    }

    pub fn build(mut self) -> TemporalGraph<W> {
        self.edges.sort_by_key(|e| (e.u, e.v));
        for (id, e) in self.edges.iter_mut().enumerate() {
            e.id = id;
        }
        TemporalGraph {
            n_vertices: self.n_vertices,
            lifetime: self.lifetime,
            edges: self.edges,
        }
    }
}

fn parse_header_number<'a>(
    it: &mut impl Iterator<Item = &'a str>,
    line: &str,
    line_no: usize,
    what: &str,
) -> Result<u32, ParseError> {
    let tok = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, line.len() + 1, format!("expected {}", what)))?;
    tok.parse().map_err(|_| {
        let col = line.find(tok).map_or(1, |o| o + 1);
        ParseError::syntax(line_no, col, format!("invalid {} `{}`", what, tok))
    })
}

fn parse_edge_line<W: Weight>(
    builder: &mut TemporalGraphBuilder<W>,
    raw: &str,
    line_no: usize,
) -> Result<(), ParseError> {
    let col_of = |tok: &str| raw.find(tok).map_or(1, |o| o + 1);
    let mut it = raw.split_whitespace();

    let u_tok = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, 1, "expected edge endpoint"))?;
    let u: usize = u_tok.parse().map_err(|_| {
        ParseError::syntax(line_no, col_of(u_tok), format!("invalid vertex id `{}`", u_tok))
    })?;
    let v_tok = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, raw.len() + 1, "expected edge endpoint"))?;
    let v: usize = v_tok.parse().map_err(|_| {
        ParseError::syntax(line_no, col_of(v_tok), format!("invalid vertex id `{}`", v_tok))
    })?;
    let w_tok = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, raw.len() + 1, "expected edge weight"))?;
    let weight: W = w_tok.parse().map_err(|_| {
        ParseError::syntax(line_no, col_of(w_tok), format!("invalid weight `{}`", w_tok))
    })?;

    let mut intervals = Vec::new();
    for tok in it {
        let inner = tok
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                ParseError::syntax(
                    line_no,
                    col_of(tok),
                    format!("expected interval `(s,f)`, got `{}`", tok),
                )
            })?;
        let (s_str, f_str) = inner.split_once(',').ok_or_else(|| {
            ParseError::syntax(line_no, col_of(tok), format!("expected `s,f` inside `{}`", tok))
        })?;
        let s: Timestep = s_str.trim().parse().map_err(|_| {
            ParseError::syntax(line_no, col_of(tok), format!("invalid interval start `{}`", s_str))
        })?;
        let f: Timestep = f_str.trim().parse().map_err(|_| {
            ParseError::syntax(line_no, col_of(tok), format!("invalid interval finish `{}`", f_str))
        })?;
        intervals.push((s, f));
    }

    builder
        .add_edge(u, v, weight, intervals)
        .map_err(|source| ParseError::Graph { line: line_no, source })
}
