//! Acceptance suite: seven seeded end-to-end checks covering the pipeline
//! against its oracles, the reduction, the decomposition lift bound, and
//! the file formats. Each test prints one summary line; run with
//! `cargo test -p timed-matching-cli --test acceptance -- --nocapture`.

use std::time::Instant;

use timed_matching::generator::{generate, GenSpec, UnderlyingFamily, WeightGrid};
use timed_matching::mwis;
use timed_matching::overlap::build_overlap_graph;
use timed_matching::reduction::reduce_independent_set;
use timed_matching::solver::{matching_brute_force, solve, SolveOptions};
use timed_matching::treedec::{
    decompose_exact, decompose_heuristic, lift_decomposition, make_nice, validate_decomposition,
    EliminationStrategy, ExactResult, NodeKind,
};
use timed_matching::{GraphError, StaticGraphF64, TemporalGraphF64};

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Small seeded temporal graphs: n <= 10, |E| <= 14, T <= 12, positive
/// quarter-grid weights.
fn small_temporal_instance(seed: u64) -> TemporalGraphF64 {
    let family = match seed % 4 {
        0 => UnderlyingFamily::Tree,
        1 => UnderlyingFamily::Star,
        2 => UnderlyingFamily::PartialKTree { k: 2 },
        _ => UnderlyingFamily::BoundedDegreeRandom,
    };
    let n_vertices = 2 + (seed as usize / 4) % 9; // 2..=10
    let max_degree = match family {
        UnderlyingFamily::Star => n_vertices.saturating_sub(1).max(1),
        _ => {
            // Keep the edge count under the oracle cap: |E| <= n·Δ/2 <= 14.
            let d = 2 + (seed as usize) % 2;
            if n_vertices * d / 2 > 14 {
                2
            } else {
                d
            }
        }
    };
    let spec = GenSpec {
        seed,
        n_vertices,
        lifetime: 1 + (seed % 12) as u32,
        max_degree,
        family,
        interval_density: 0.15 + 0.05 * ((seed % 8) as f64),
        max_intervals_per_edge: 1 + (seed as usize) % 4,
        weight_grid: WeightGrid::QuarterGrid { max_quarters: 32 },
    };
    let g = generate(&spec).expect("feasible spec");
    assert!(g.n_vertices() <= 10 && g.n_edges() <= 14 && g.lifetime() <= 12);
    g
}

/// Seeded vertex-weighted static graph on up to `max_n` vertices.
fn random_static_graph(seed: u64, max_n: usize) -> StaticGraphF64 {
    let mut state = seed;
    let n = 4 + (splitmix(&mut state) as usize) % (max_n - 3);
    let mut g = StaticGraphF64::new(n);
    let density_percent = 15 + splitmix(&mut state) % 35;
    for u in 0..n {
        for v in u + 1..n {
            if splitmix(&mut state) % 100 < density_percent {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    let weights: Vec<f64> = (0..n)
        .map(|_| (1 + splitmix(&mut state) % 64) as f64 * 0.25)
        .collect();
    g.set_vertex_weights(weights).unwrap();
    g
}

#[test]
fn acceptance_1_end_to_end_oracle_equivalence() {
    let started = Instant::now();
    let instances = 520;
    for seed in 0..instances {
        let g = small_temporal_instance(seed);
        let report = solve(&g, &SolveOptions::default()).unwrap();
        let oracle = matching_brute_force(&g).unwrap();
        assert_eq!(
            report.matching.total_weight, oracle.total_weight,
            "seed {}: solver weight differs from oracle",
            seed
        );
        assert!(g.verify_matching(&report.matching.edge_ids).unwrap());
        assert!(g.verify_matching(&oracle.edge_ids).unwrap());
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "oracle equivalence took {:?}, budget is 60 s",
        elapsed
    );
    println!(
        "ACCEPTANCE 1 (end-to-end oracle equivalence): PASS - {} instances in {:?}",
        instances, elapsed
    );
}

#[test]
fn acceptance_2_mwis_dp_against_brute_force() {
    let mut join_instances = 0;
    let mut checked = 0;
    for seed in 0..500u64 {
        // Alternate direct random graphs with overlap graphs of temporal
        // instances so both shapes are covered.
        let g = if seed % 2 == 0 {
            random_static_graph(seed, 16)
        } else {
            let tg = small_temporal_instance(seed);
            let og = build_overlap_graph(&tg);
            let mut g = og.graph.clone();
            if g.n_vertices() == 0 {
                g = random_static_graph(seed, 12);
            }
            g
        };
        assert!(g.n_vertices() <= 16);
        let oracle = mwis::brute_force(&g).unwrap();

        let mut decompositions = vec![
            decompose_heuristic(&g, EliminationStrategy::MinFill),
            decompose_heuristic(&g, EliminationStrategy::MinDegree),
        ];
        match decompose_exact(&g, g.n_vertices().saturating_sub(1), u64::MAX) {
            ExactResult::Decomposition(td) => decompositions.push(td),
            other => panic!("seed {}: exact decomposition failed: {:?}", seed, other),
        }

        let nice = make_nice(&decompositions[0]);
        if nice
            .nodes()
            .iter()
            .any(|n| matches!(n.kind, NodeKind::Join))
        {
            join_instances += 1;
        }

        for td in &decompositions {
            let nice = make_nice(td);
            let dp = mwis::tree_dp(&g, &nice).unwrap();
            assert_eq!(dp.weight, oracle.weight, "seed {}: weight mismatch", seed);
            assert_eq!(dp.vertices, oracle.vertices, "seed {}: set mismatch", seed);
        }
        checked += 1;
    }
    assert!(checked >= 500);
    assert!(
        join_instances >= 100,
        "only {} instances had Join nodes",
        join_instances
    );
    println!(
        "ACCEPTANCE 2 (MWIS DP vs brute force): PASS - {} instances, {} with Join nodes",
        checked, join_instances
    );
}

#[test]
fn acceptance_3_reduction_preserves_sizes_and_invariants() {
    let mut checked = 0;
    for seed in 0..300u64 {
        let g = random_static_graph(seed, 12);
        let mut unit = g.clone();
        unit.set_vertex_weights(vec![1.0; g.n_vertices()]).unwrap();
        let best_is = mwis::brute_force(&unit).unwrap();
        let k = best_is.vertices.len();

        let ri = reduce_independent_set(&g, k);
        assert_eq!(ri.k_prime, k);

        // Instance invariants: temporal star (a temporal tree), lifetime
        // m + n_0, unit intervals in the label structure.
        let m = g.n_edges() as u32;
        let n0 = (0..g.n_vertices()).filter(|&v| g.degree(v) == 0).count() as u32;
        assert_eq!(ri.temporal.lifetime(), m + n0);
        assert_eq!(ri.temporal.n_vertices(), g.n_vertices() + 1);
        assert_eq!(ri.temporal.n_edges(), g.n_vertices());
        let hub = ri.hub_vertex();
        for e in ri.temporal.edges() {
            assert_eq!(e.v, hub, "every edge joins a source vertex to the hub");
            assert!(e.intervals.iter().all(|iv| iv.finish == iv.start + 1));
            let expected = if g.degree(e.u) == 0 { 1 } else { g.degree(e.u) };
            assert_eq!(e.intervals.len(), expected);
        }

        // Size equivalence via the matching oracle.
        let best_matching = matching_brute_force(&ri.temporal).unwrap();
        assert_eq!(
            best_matching.cardinality(),
            k,
            "seed {}: matching cardinality differs from independence number",
            seed
        );

        // Mappings are size-preserving and produce valid solutions.
        let matched = ri.to_matching(&best_is.vertices).unwrap();
        assert_eq!(matched.len(), k);
        assert!(ri.temporal.verify_matching(&matched).unwrap());
        let back = ri.to_independent_set(&matched).unwrap();
        assert_eq!(back, best_is.vertices);

        let projected = ri.to_independent_set(&best_matching.edge_ids).unwrap();
        assert_eq!(projected.len(), best_matching.cardinality());
        for (i, &a) in projected.iter().enumerate() {
            for &b in &projected[i + 1..] {
                assert!(!g.has_edge(a, b), "projected set must be independent");
            }
        }
        checked += 1;
    }
    assert!(checked >= 300);
    println!(
        "ACCEPTANCE 3 (Independent Set reduction): PASS - {} instances",
        checked
    );
}

#[test]
fn acceptance_4_lift_width_bound() {
    let mut checked = 0;
    for k in 1..=3usize {
        for seed in 0..35u64 {
            let spec = GenSpec {
                seed,
                n_vertices: 10 + (seed as usize % 5),
                lifetime: 12,
                max_degree: 4,
                family: UnderlyingFamily::PartialKTree { k },
                interval_density: 0.3,
                max_intervals_per_edge: 4,
                weight_grid: WeightGrid::QuarterGrid { max_quarters: 16 },
            };
            let g: TemporalGraphF64 = generate(&spec).unwrap();
            let underlying = g.underlying_graph();
            assert!(underlying.max_degree() <= 4);
            let og = build_overlap_graph(&g);
            let td_u = decompose_heuristic(&underlying, EliminationStrategy::MinFill);
            let lifted = lift_decomposition(&td_u, &g, &og).unwrap();
            assert!(
                validate_decomposition(&lifted, &og.graph).is_empty(),
                "k={} seed={}: lifted decomposition invalid",
                k,
                seed
            );
            // Width form of the bound: width ≤ (width(td_U)+1)·Δ − 1,
            // compared as bag sizes to stay meaningful for empty bags.
            let delta = underlying.max_degree();
            assert!(
                lifted.max_bag_size() <= td_u.max_bag_size() * delta.max(1),
                "k={} seed={}: lifted width {} exceeds ({}+1)*{}-1",
                k,
                seed,
                lifted.width(),
                td_u.width(),
                delta
            );
            checked += 1;
        }
    }
    assert!(checked >= 100);
    println!(
        "ACCEPTANCE 4 (constructive lift width bound): PASS - {} instances",
        checked
    );
}

#[test]
fn acceptance_5_every_decomposition_validates_and_nice_preserves_width() {
    let mut decompositions_checked = 0;
    let mut nice_checked = 0;
    for seed in 0..260u64 {
        let tg = small_temporal_instance(seed);
        let og = build_overlap_graph(&tg);
        let underlying = tg.underlying_graph();

        for (g, label) in [(&og.graph, "overlap"), (&underlying, "underlying")] {
            for strategy in [EliminationStrategy::MinFill, EliminationStrategy::MinDegree] {
                let td = decompose_heuristic(g, strategy);
                assert!(
                    validate_decomposition(&td, g).is_empty(),
                    "seed {} {}: heuristic decomposition invalid",
                    seed,
                    label
                );
                let nice = make_nice(&td);
                nice.validate_structure().unwrap();
                assert!(validate_decomposition(&nice.as_tree_decomposition(), g).is_empty());
                assert_eq!(nice.width(), td.width(), "width must be preserved");
                decompositions_checked += 1;
                nice_checked += 1;
            }
            if g.n_vertices() <= 14 {
                if let ExactResult::Decomposition(td) =
                    decompose_exact(g, g.n_vertices().saturating_sub(1), 2_000_000)
                {
                    assert!(validate_decomposition(&td, g).is_empty());
                    let nice = make_nice(&td);
                    assert_eq!(nice.width(), td.width());
                    decompositions_checked += 1;
                    nice_checked += 1;
                }
            }
        }

        let td_u = decompose_heuristic(&underlying, EliminationStrategy::MinFill);
        let lifted = lift_decomposition(&td_u, &tg, &og).unwrap();
        assert!(validate_decomposition(&lifted, &og.graph).is_empty());
        let nice = make_nice(&lifted);
        assert_eq!(nice.width(), lifted.width());
        decompositions_checked += 1;
        nice_checked += 1;
    }
    assert!(nice_checked >= 500, "only {} nice conversions", nice_checked);
    println!(
        "ACCEPTANCE 5 (decomposition validity): PASS - {} decompositions, {} nice conversions",
        decompositions_checked, nice_checked
    );
}

#[test]
fn acceptance_6_scaling_smoke() {
    // Temporal trees with degree cap 3: |E| = n - 1 and the lifted width
    // stays below (1+1)*3 - 1 = 5, so the DP cost is edge-linear at fixed
    // width. Timing ratios are reported, not asserted; the gate is the
    // 120 s completion budget.
    let started = Instant::now();
    let sizes = [100usize, 200, 400, 800];
    let grid: Vec<String> = sizes
        .iter()
        .map(|&m| {
            format!(
                "seed=11 n={} lifetime=32 max-degree=3 family=tree density=0.15 max-intervals=4 weights=quarter:16",
                m + 1
            )
        })
        .collect();
    let specs: Vec<_> = grid
        .iter()
        .enumerate()
        .map(|(i, line)| timed_matching_cli::bench::parse_grid_line(line, i + 1).unwrap())
        .collect();
    // Two repetitions; the second one is read so the first absorbs warm-up.
    let csv = timed_matching_cli::bench::run_grid(&specs, 2).unwrap();

    let mut dp_times = Vec::new();
    let mut edges = Vec::new();
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        if cols[1] != "1" {
            continue;
        }
        edges.push(cols[5].parse::<u64>().unwrap());
        dp_times.push(cols[15].parse::<u64>().unwrap());
    }
    assert_eq!(edges, vec![100, 200, 400, 800]);

    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "scaling smoke took {:?}, budget is 120 s",
        elapsed
    );
    let ratios: Vec<String> = dp_times
        .windows(2)
        .map(|w| format!("{:.2}x", w[1] as f64 / w[0].max(1) as f64))
        .collect();
    println!(
        "ACCEPTANCE 6 (scaling smoke): PASS - dp_us {:?} per |E| {:?}, doubling ratios {:?} (report only), total {:?}",
        dp_times, edges, ratios, elapsed
    );
}

#[test]
fn acceptance_7_format_roundtrip_and_error_kinds() {
    let mut checked = 0;
    for seed in 0..1000u64 {
        let g = small_temporal_instance(seed);
        let text = g.to_text();
        let parsed = TemporalGraphF64::parse(&text).unwrap();
        assert_eq!(parsed, g, "seed {}: round-trip mismatch", seed);
        assert_eq!(parsed.to_text(), text);
        checked += 1;
    }
    assert!(checked >= 1000);

    // The designated malformed-input cases map to their error kinds.
    let ok = TemporalGraphF64::parse("3 6\n0 1 7.0 (0,2)\n").unwrap();
    assert_eq!(
        (ok.n_vertices(), ok.lifetime(), ok.n_edges()),
        (3, 6, 1)
    );
    assert_eq!(ok.edges()[0].weight, 7.0);

    let self_loop = TemporalGraphF64::parse("2 4\n0 0 1.0 (0,1)\n").unwrap_err();
    assert_eq!(self_loop.graph_error(), Some(&GraphError::SelfLoop(0)));

    let empty_interval = TemporalGraphF64::parse("2 4\n0 1 1.0 (2,2)\n").unwrap_err();
    assert_eq!(
        empty_interval.graph_error(),
        Some(&GraphError::EmptyInterval { start: 2, finish: 2 })
    );

    let out_of_range = TemporalGraphF64::parse("2 4\n0 1 1.0 (2,6)\n").unwrap_err();
    assert!(matches!(
        out_of_range.graph_error(),
        Some(&GraphError::IntervalOutOfRange { .. })
    ));

    let duplicate = TemporalGraphF64::parse("2 4\n0 1 1.0 (0,1)\n1 0 2.0 (2,3)\n").unwrap_err();
    assert_eq!(duplicate.graph_error(), Some(&GraphError::DuplicateEdge(0, 1)));

    let negative = TemporalGraphF64::parse("2 4\n0 1 -2.0 (0,1)\n").unwrap_err();
    assert_eq!(negative.graph_error(), Some(&GraphError::NegativeWeight));

    let overlapping = TemporalGraphF64::parse("2 4\n0 1 1.0 (0,2) (1,3)\n").unwrap_err();
    assert!(matches!(
        overlapping.graph_error(),
        Some(&GraphError::OverlappingIntervals(..))
    ));

    println!(
        "ACCEPTANCE 7 (format round-trip and error kinds): PASS - {} round-trips, 6 error kinds",
        checked
    );
}
