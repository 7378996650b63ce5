//! Seeded random temporal-graph generation with structural controls.
//!
//! Randomness comes from xoshiro256++ streams. Each generation phase
//! (structure, intervals, weights) runs on its own stream, seeded by the
//! user seed XOR a fixed phase constant, so changing one phase's
//! consumption pattern never perturbs the others.

use rand::prelude::*;
use rand_xoshiro::Xoshiro256PlusPlus;
use thiserror::Error;

use crate::temporal::{TemporalGraph, Timestep};
use crate::weight::Weight;

const PHASE_STRUCTURE: u64 = 0x9e37_79b9_7f4a_7c15;
const PHASE_INTERVALS: u64 = 0xbf58_476d_1ce4_e5b9;
const PHASE_WEIGHTS: u64 = 0x94d0_49bb_1331_11eb;

/// Probability that an eligible extra edge is kept, for the families that
/// thin a denser skeleton.
const KEEP_EDGE_PROBABILITY: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnderlyingFamily {
    /// Random k-tree construction followed by edge deletion; treewidth of
    /// the result is at most `k` by construction.
    PartialKTree { k: usize },
    /// Uniform random attachment tree.
    Tree,
    /// Random edge insertion under the degree cap.
    BoundedDegreeRandom,
    /// All edges incident to vertex 0.
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightGrid {
    /// Every weight is 1.
    Unit,
    /// Uniform multiples of 0.25 in `[0.25, max_quarters * 0.25]`; exactly
    /// representable in binary, so weight sums are order-independent.
    QuarterGrid { max_quarters: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub seed: u64,
    pub n_vertices: usize,
    pub lifetime: Timestep,
    pub max_degree: usize,
    pub family: UnderlyingFamily,
    /// Probability that an edge is active in any given unit time slot.
    pub interval_density: f64,
    pub max_intervals_per_edge: usize,
    pub weight_grid: WeightGrid,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("infeasible spec: {0}")]
    Infeasible(String),
}

/// Generates a temporal graph. Identical specs produce identical graphs.
pub fn generate<W: Weight>(spec: &GenSpec) -> Result<TemporalGraph<W>, GenError> {
    validate_spec(spec)?;

    let mut structure_rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed ^ PHASE_STRUCTURE);
    let edges = underlying_edges(spec, &mut structure_rng)?;
    if !edges.is_empty() && spec.lifetime == 0 {
        return Err(GenError::Infeasible(
            "edges need a lifetime of at least 1".to_string(),
        ));
    }

    let mut interval_rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed ^ PHASE_INTERVALS);
    let mut weight_rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed ^ PHASE_WEIGHTS);

    let mut builder = TemporalGraph::builder(spec.n_vertices, spec.lifetime);
    for (u, v) in edges {
        let intervals = sample_intervals(spec, &mut interval_rng);
        let weight = sample_weight::<W>(&spec.weight_grid, &mut weight_rng);
        builder
            .add_edge(u, v, weight, intervals)
            .expect("generated edges satisfy the graph invariants");
    }
    Ok(builder.build())
}

fn validate_spec(spec: &GenSpec) -> Result<(), GenError> {
    if spec.n_vertices == 0 {
        return Err(GenError::InvalidSpec("n_vertices must be positive".to_string()));
    }
    if !(0.0..=1.0).contains(&spec.interval_density) {
        return Err(GenError::InvalidSpec(
            "interval_density must lie in [0, 1]".to_string(),
        ));
    }
    if spec.max_intervals_per_edge == 0 {
        return Err(GenError::InvalidSpec(
            "max_intervals_per_edge must be positive".to_string(),
        ));
    }
    if let UnderlyingFamily::PartialKTree { k } = spec.family {
        if k == 0 {
            return Err(GenError::InvalidSpec("k must be positive".to_string()));
        }
    }
    if let WeightGrid::QuarterGrid { max_quarters } = spec.weight_grid {
        if max_quarters == 0 {
            return Err(GenError::InvalidSpec(
                "quarter grid needs max_quarters >= 1".to_string(),
            ));
        }
    }
    Ok(())
}

fn underlying_edges(
    spec: &GenSpec,
    rng: &mut Xoshiro256PlusPlus,
) -> Result<Vec<(usize, usize)>, GenError> {
    let n = spec.n_vertices;
    let cap = spec.max_degree;
    match spec.family {
        UnderlyingFamily::Tree => {
            if n == 1 {
                return Ok(Vec::new());
            }
            if cap < 1 || (n > 2 && cap < 2) {
                return Err(GenError::Infeasible(format!(
                    "a tree on {} vertices needs max degree >= 2",
                    n
                )));
            }
            // Each attached vertex opens cap - 1 >= 1 fresh slots, so a
            // vertex with spare capacity always exists.
            let mut degree = vec![0usize; n];
            let mut edges = Vec::with_capacity(n - 1);
            for v in 1..n {
                let candidates: Vec<usize> = (0..v).filter(|&u| degree[u] < cap).collect();
                let &u = candidates.choose(rng).expect("spare capacity exists");
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u.min(v), u.max(v)));
            }
            Ok(edges)
        }
        UnderlyingFamily::Star => {
            if n >= 2 && cap < n - 1 {
                return Err(GenError::Infeasible(format!(
                    "a star on {} vertices needs max degree >= {}",
                    n,
                    n - 1
                )));
            }
            Ok((1..n).map(|v| (0, v)).collect())
        }
        UnderlyingFamily::BoundedDegreeRandom => {
            let mut degree = vec![0usize; n];
            let mut edges = Vec::new();
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            pairs.shuffle(rng);
            for (u, v) in pairs {
                if degree[u] < cap && degree[v] < cap && rng.gen_bool(KEEP_EDGE_PROBABILITY) {
                    degree[u] += 1;
                    degree[v] += 1;
                    edges.push((u, v));
                }
            }
            edges.sort_unstable();
            Ok(edges)
        }
        UnderlyingFamily::PartialKTree { k } => {
            // Random k-tree skeleton.
            let mut adjacency = vec![vec![false; n]; n];
            let mut edges: Vec<(usize, usize)> = Vec::new();
            let add = |edges: &mut Vec<(usize, usize)>, adjacency: &mut Vec<Vec<bool>>, u: usize, v: usize| {
                if !adjacency[u][v] {
                    adjacency[u][v] = true;
                    adjacency[v][u] = true;
                    edges.push((u.min(v), u.max(v)));
                }
            };
            let clique_size = (k + 1).min(n);
            for u in 0..clique_size {
                for v in u + 1..clique_size {
                    add(&mut edges, &mut adjacency, u, v);
                }
            }
            // All k-subsets of the initial clique are attachment points.
            let mut cliques: Vec<Vec<usize>> = if clique_size == k + 1 {
                (0..clique_size)
                    .map(|skip| (0..clique_size).filter(|&x| x != skip).collect())
                    .collect()
            } else {
                Vec::new()
            };
            for v in clique_size..n {
                let base = cliques.choose(rng).expect("at least one clique").clone();
                for &u in &base {
                    add(&mut edges, &mut adjacency, u, v);
                }
                for i in 0..base.len() {
                    let mut next = base.clone();
                    next[i] = v;
                    next.sort_unstable();
                    cliques.push(next);
                }
            }

            // Thin the skeleton, then enforce the degree cap by deleting
            // edges at over-full vertices. Any subgraph keeps treewidth <= k.
            let mut kept: Vec<(usize, usize)> = Vec::new();
            for &(u, v) in &edges {
                if rng.gen_bool(KEEP_EDGE_PROBABILITY) {
                    kept.push((u, v));
                }
            }
            let mut degree = vec![0usize; n];
            for &(u, v) in &kept {
                degree[u] += 1;
                degree[v] += 1;
            }
            kept.sort_unstable();
            while let Some(v) = (0..n).find(|&v| degree[v] > cap) {
                let pos = kept
                    .iter()
                    .rposition(|&(a, b)| a == v || b == v)
                    .expect("over-full vertex has edges");
                let (a, b) = kept.remove(pos);
                degree[a] -= 1;
                degree[b] -= 1;
            }
            Ok(kept)
        }
    }
}

fn sample_intervals(spec: &GenSpec, rng: &mut Xoshiro256PlusPlus) -> Vec<(Timestep, Timestep)> {
    let t = spec.lifetime;
    let mut slots: Vec<bool> = (0..t).map(|_| rng.gen_bool(spec.interval_density)).collect();
    if slots.iter().all(|&s| !s) {
        let forced = rng.gen_range(0..t);
        slots[forced as usize] = true;
    }
    // Merge adjacent slots into maximal runs.
    let mut runs: Vec<(Timestep, Timestep)> = Vec::new();
    let mut start: Option<Timestep> = None;
    for i in 0..t {
        match (slots[i as usize], start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                runs.push((s, i));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push((s, t));
    }
    let cap = spec
        .max_intervals_per_edge
        .min(((t / 2) as usize).max(1));
    runs.truncate(cap);
    runs
}

fn sample_weight<W: Weight>(grid: &WeightGrid, rng: &mut Xoshiro256PlusPlus) -> W {
    match grid {
        WeightGrid::Unit => W::one(),
        WeightGrid::QuarterGrid { max_quarters } => {
            let steps = rng.gen_range(1..=*max_quarters);
            W::from_quarter_steps(steps)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::{decompose_exact, ExactResult};

    fn spec(family: UnderlyingFamily, n: usize, seed: u64) -> GenSpec {
        GenSpec {
            seed,
            n_vertices: n,
            lifetime: 10,
            max_degree: 3,
            family,
            interval_density: 0.3,
            max_intervals_per_edge: 3,
            weight_grid: WeightGrid::QuarterGrid { max_quarters: 16 },
        }
    }

    fn is_acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &(u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    #[test]
    fn tree_family_is_a_tree() {
        for seed in 0..20 {
            let g: TemporalGraph<f64> = generate(&spec(UnderlyingFamily::Tree, 5, seed)).unwrap();
            assert_eq!(g.n_edges(), 4);
            let edges: Vec<_> = g.underlying_graph().edges().collect();
            assert!(is_acyclic(5, &edges));
            assert!(g.underlying_graph().max_degree() <= 3);
        }
    }

    #[test]
    fn partial_k_tree_respects_width_bound() {
        for seed in 0..20 {
            let g: TemporalGraph<f64> =
                generate(&spec(UnderlyingFamily::PartialKTree { k: 2 }, 10, seed)).unwrap();
            let underlying = g.underlying_graph();
            assert!(underlying.max_degree() <= 3);
            match decompose_exact(&underlying, 2, u64::MAX) {
                ExactResult::Decomposition(td) => assert!(td.width() <= 2),
                other => panic!("expected width <= 2, got {:?}", other),
            }
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let s = spec(UnderlyingFamily::BoundedDegreeRandom, 12, 99);
        let a: TemporalGraph<f64> = generate(&s).unwrap();
        let b: TemporalGraph<f64> = generate(&s).unwrap();
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn quarter_grid_weights_are_exact() {
        let g: TemporalGraph<f64> =
            generate(&spec(UnderlyingFamily::BoundedDegreeRandom, 10, 7)).unwrap();
        for e in g.edges() {
            let quarters = e.weight * 4.0;
            assert_eq!(quarters.fract(), 0.0);
            assert!(e.weight > 0.0);
        }
    }

    #[test]
    fn star_family_and_infeasibility() {
        // Degree cap 3 fits a 4-vertex star but not a 5-vertex one.
        let g: TemporalGraph<f64> = generate(&spec(UnderlyingFamily::Star, 4, 3)).unwrap();
        assert_eq!(g.n_edges(), 3);
        assert_eq!(g.underlying_graph().degree(0), 3);
        assert!(matches!(
            generate::<f64>(&spec(UnderlyingFamily::Star, 5, 3)),
            Err(GenError::Infeasible(_))
        ));

        let t = GenSpec {
            max_degree: 1,
            ..spec(UnderlyingFamily::Tree, 4, 0)
        };
        assert!(matches!(generate::<f64>(&t), Err(GenError::Infeasible(_))));
    }

    #[test]
    fn interval_cap_respected() {
        for seed in 0..10 {
            let s = GenSpec {
                interval_density: 0.9,
                max_intervals_per_edge: 2,
                ..spec(UnderlyingFamily::Tree, 6, seed)
            };
            let g: TemporalGraph<f64> = generate(&s).unwrap();
            for e in g.edges() {
                assert!(!e.intervals.is_empty());
                assert!(e.intervals.len() <= 2);
            }
        }
    }
}
