//! Benchmark harness: reads a grid of generator specs, solves each
//! instance the requested number of times, and emits one CSV row per run
//! with instance stats, phase timings, and results.

use std::fs;

use timed_matching::generator::{self, GenSpec, UnderlyingFamily, WeightGrid};
use timed_matching::solver::{self, SolveOptions};
use timed_matching::TemporalGraphF64;

use crate::{parse_family, parse_weight_grid, write_output, BenchArgs, CliError};

pub const CSV_HEADER: &str = "instance,rep,seed,family,n_vertices,n_edges,lifetime,max_degree,\
overlap_vertices,overlap_edges,width,nice_nodes,\
overlap_build_us,decompose_us,nice_us,dp_us,extract_us,total_us,weight,cardinality";

/// One grid line: the generator spec it describes.
pub fn parse_grid_line(line: &str, line_no: usize) -> Result<GenSpec, CliError> {
    let mut seed: u64 = 0;
    let mut n_vertices: Option<usize> = None;
    let mut lifetime: Option<u32> = None;
    let mut max_degree: usize = 3;
    let mut family: UnderlyingFamily = UnderlyingFamily::BoundedDegreeRandom;
    let mut density: f64 = 0.3;
    let mut max_intervals: usize = 4;
    let mut weights: WeightGrid = WeightGrid::QuarterGrid { max_quarters: 16 };

    for token in line.split_whitespace() {
        let (key, value) = token.split_once('=').ok_or_else(|| {
            CliError {
                exit_code: crate::EXIT_FORMAT,
                message: format!("grid line {}: expected key=value, got `{}`", line_no, token),
            }
        })?;
        let bad = |what: &str| CliError {
            exit_code: crate::EXIT_FORMAT,
            message: format!("grid line {}: invalid {} `{}`", line_no, what, value),
        };
        match key {
            "seed" => seed = value.parse().map_err(|_| bad("seed"))?,
            "n" => n_vertices = Some(value.parse().map_err(|_| bad("n"))?),
            "lifetime" => lifetime = Some(value.parse().map_err(|_| bad("lifetime"))?),
            "max-degree" => max_degree = value.parse().map_err(|_| bad("max-degree"))?,
            "family" => family = parse_family(value)?,
            "density" => density = value.parse().map_err(|_| bad("density"))?,
            "max-intervals" => max_intervals = value.parse().map_err(|_| bad("max-intervals"))?,
            "weights" => weights = parse_weight_grid(value)?,
            other => {
                return Err(CliError {
                    exit_code: crate::EXIT_FORMAT,
                    message: format!("grid line {}: unknown key `{}`", line_no, other),
                })
            }
        }
    }
    let n_vertices = n_vertices.ok_or_else(|| CliError {
        exit_code: crate::EXIT_FORMAT,
        message: format!("grid line {}: missing n=", line_no),
    })?;
    let lifetime = lifetime.ok_or_else(|| CliError {
        exit_code: crate::EXIT_FORMAT,
        message: format!("grid line {}: missing lifetime=", line_no),
    })?;
    Ok(GenSpec {
        seed,
        n_vertices,
        lifetime,
        max_degree,
        family,
        interval_density: density,
        max_intervals_per_edge: max_intervals,
        weight_grid: weights,
    })
}

fn family_name(f: UnderlyingFamily) -> String {
    match f {
        UnderlyingFamily::Tree => "tree".to_string(),
        UnderlyingFamily::Star => "star".to_string(),
        UnderlyingFamily::BoundedDegreeRandom => "bounded-degree-random".to_string(),
        UnderlyingFamily::PartialKTree { k } => format!("partial-k-tree:{}", k),
    }
}

/// Runs the grid sequentially; rows are ordered by (instance, rep).
pub fn run_grid(specs: &[GenSpec], repetitions: usize) -> Result<String, CliError> {
    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for (index, spec) in specs.iter().enumerate() {
        let g: TemporalGraphF64 = generator::generate(spec)?;
        let max_degree = g.underlying_graph().max_degree();
        for rep in 0..repetitions {
            let report = solver::solve(&g, &SolveOptions::default())?;
            let t = &report.timings;
            let total =
                t.overlap_build_us + t.decompose_us + t.nice_us + t.dp_us + t.extract_us;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                index,
                rep,
                spec.seed,
                family_name(spec.family),
                g.n_vertices(),
                g.n_edges(),
                g.lifetime(),
                max_degree,
                report.overlap_vertices,
                report.overlap_edges,
                report.decomposition_width,
                report.nice_node_count,
                t.overlap_build_us,
                t.decompose_us,
                t.nice_us,
                t.dp_us,
                t.extract_us,
                total,
                report.matching.total_weight,
                report.matching.cardinality(),
            ));
        }
    }
    Ok(csv)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.grid).map_err(|e| CliError {
        exit_code: crate::EXIT_FORMAT,
        message: format!("cannot read {}: {}", args.grid.display(), e),
    })?;
    let mut specs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        specs.push(parse_grid_line(line, idx + 1)?);
    }
    let csv = run_grid(&specs, args.repetitions)?;
    write_output(args.output.as_ref(), &csv)
}
