//! End-to-end runs: the `triples`, `draw`, `verify`, `gen` and `bench`
//! commands, independent of argument parsing.

use crate::bench::{bench_bounds, write_csv, BenchClass};
use crate::bounds::{self, PiSq};
use crate::embed::{draw_cactus, draw_star, draw_tree, Algorithm, Drawing};
use crate::error::{Error, Result};
use crate::generate::{generate_random, GenKind, GenParams};
use crate::graph::{assign_cactus, assign_tree, classify, decompose_cactus, root_tree, GraphClass, InputGraph};
use crate::io;
use crate::pythagorean::{angle_sorted_prefix, first_k_primitive};
use crate::svg::render_svg;
use crate::verify::{certify, CertReport, Structure};
use num_rational::BigRational;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const MAX_COORD_BITS_ENV: &str = "GRIDFARY_MAX_COORD_BITS";
/// Coordinates below 2⁶² keep every orientation and squared distance inside 128 bits.
pub const DEFAULT_MAX_COORD_BITS: u32 = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

#[derive(Debug, Clone)]
pub enum Command {
    Triples { count: usize, angle_sorted: bool, format: TableFormat },
    Draw { input: PathBuf, output: Option<PathBuf>, svg: Option<PathBuf>, algorithm: Option<Algorithm>, root: Option<usize> },
    Verify { drawing: PathBuf, graph: Option<PathBuf>, profile: Option<Algorithm>, format: ReportFormat },
    Gen { kind: GenKind, n: usize, seed: u64, params: GenParams, output: Option<PathBuf> },
    Bench { class: BenchClass, sizes: Vec<usize>, trials: usize, seed: u64, output: Option<PathBuf> },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    /// Refuse to draw when the worst-case coordinate reaches 2^bits.
    pub max_coord_bits: u32,
}

impl RunConfig {
    /// Threshold taken from `GRIDFARY_MAX_COORD_BITS` when set, capped at 62.
    pub fn new(command: Command) -> Result<Self> {
        let bits = match std::env::var(MAX_COORD_BITS_ENV) {
            Ok(v) => v
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Format(format!("{MAX_COORD_BITS_ENV}={v:?} is not a bit count")))?
                .clamp(1, DEFAULT_MAX_COORD_BITS),
            Err(_) => DEFAULT_MAX_COORD_BITS,
        };
        Ok(RunConfig { command, max_coord_bits: bits })
    }
}

/// A drawing together with the structure it was built from.
#[derive(Debug, Clone)]
pub struct Drawn {
    pub drawing: Drawing,
    pub structure: Structure,
    /// Worst-case side length the algorithm guarantees.
    pub grid_bound: BigRational,
}

fn choose(g: &InputGraph, requested: Option<Algorithm>) -> Result<Algorithm> {
    let class = classify(g);
    match (requested, class) {
        (_, GraphClass::Unsupported) => Err(Error::Unsupported("graph is not a cactus (some edge lies on two cycles)".into())),
        // a star rooted at a leaf is drawn as a tree
        (None, GraphClass::Star) if g.root().is_some_and(|r| g.n() > 2 && g.degree(r) != g.n() - 1) => Ok(Algorithm::Tree),
        (None, GraphClass::Star) => Ok(Algorithm::Star),
        (None, GraphClass::Tree) => Ok(Algorithm::Tree),
        (None, GraphClass::Cactus) => Ok(Algorithm::Cactus),
        (Some(Algorithm::Star), c) if c != GraphClass::Star => Err(Error::Unsupported(format!("star algorithm on a {}", c.as_str()))),
        (Some(Algorithm::Tree), GraphClass::Cactus) => Err(Error::Unsupported("tree algorithm on a graph with cycles".into())),
        (Some(a), _) => Ok(a),
    }
}

fn refuse_above(bound: &BigRational, bits: u32) -> Result<()> {
    let limit = 1u128 << bits;
    if bounds::floor_u128(bound) >= limit {
        return Err(Error::Overflow(format!(
            "worst-case coordinate {:.3e} reaches the threshold 2^{bits}; set {MAX_COORD_BITS_ENV} to change it",
            bounds::to_f64(bound)
        )));
    }
    Ok(())
}

/// Classify, root, assign triples and draw, refusing instances whose
/// guaranteed grid size reaches `2^max_coord_bits`.
pub fn draw_graph(g: &InputGraph, requested: Option<Algorithm>, max_coord_bits: u32) -> Result<Drawn> {
    let algorithm = choose(g, requested)?;
    match algorithm {
        Algorithm::Star => {
            let grid_bound = bounds::star_grid(g.n() as u64, PiSq::Upper);
            refuse_above(&grid_bound, max_coord_bits)?;
            let triples = angle_sorted_prefix((g.n() - 1).div_ceil(4));
            let drawing = draw_star(g, &triples)?;
            Ok(Drawn { drawing, structure: Structure::Star { n: g.n() }, grid_bound })
        }
        Algorithm::Tree => {
            let tree = root_tree(g)?;
            let grid_bound = bounds::tree_grid(tree.leaf_count(), tree.height(), PiSq::Upper);
            refuse_above(&grid_bound, max_coord_bits)?;
            let triples = angle_sorted_prefix(tree.leaf_count() as usize);
            let assignment = assign_tree(&tree, triples.len())?;
            let drawing = draw_tree(&tree, &assignment, &triples)?;
            Ok(Drawn { drawing, structure: Structure::Tree { tree, assignment, triples }, grid_bound })
        }
        Algorithm::Cactus => {
            let decomp = decompose_cactus(g)?;
            let grid_bound = bounds::cactus_grid(
                decomp.diameter(),
                decomp.leaf_count(),
                decomp.cycle_count(),
                decomp.triangle_count(),
                PiSq::Upper,
            );
            refuse_above(&grid_bound, max_coord_bits)?;
            let triples = angle_sorted_prefix(decomp.budget() as usize);
            let assignment = assign_cactus(&decomp, triples.len())?;
            let drawing = draw_cactus(&decomp, &assignment, &triples)?;
            Ok(Drawn { drawing, structure: Structure::Cactus { decomp, assignment, triples }, grid_bound })
        }
    }
}

/// [`draw_graph`] followed by the full certificate; a failing certificate
/// becomes [`Error::Verification`] carrying the first witness.
pub fn draw_and_certify(g: &InputGraph, requested: Option<Algorithm>, max_coord_bits: u32) -> Result<(Drawn, CertReport)> {
    let drawn = draw_graph(g, requested, max_coord_bits)?;
    let report = certify(&drawn.drawing, Some(&drawn.structure))?;
    if !report.passed {
        let first = serde_json::to_string(&report.violations[0]).unwrap_or_default();
        return Err(Error::Verification(format!("{} violation(s), first: {first}", report.violations.len())));
    }
    Ok((drawn, report))
}

fn emit(output: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct TripleRow {
    index: usize,
    m: u64,
    n: u64,
    variant: &'static str,
    x: u64,
    y: u64,
    ell: u64,
}

fn triples_table(count: usize, angle_sorted: bool, format: TableFormat) -> Result<String> {
    let seq = first_k_primitive(count);
    let order: Vec<usize> = if angle_sorted { seq.angle_permutation().to_vec() } else { (0..seq.len()).collect() };
    let rows: Vec<TripleRow> = order
        .iter()
        .enumerate()
        .map(|(index, &i)| {
            let e = seq.entries()[i];
            TripleRow {
                index,
                m: e.params.m,
                n: e.params.n,
                variant: e.params.variant.as_str(),
                x: e.triple.x,
                y: e.triple.y,
                ell: e.triple.ell,
            }
        })
        .collect();
    Ok(match format {
        TableFormat::Json => serde_json::to_string_pretty(&rows)? + "\n",
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).map_err(|e| Error::Format(e.to_string()))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Format(e.to_string()))?).expect("csv is utf-8")
        }
    })
}

/// Human-readable form of a certificate.
pub fn report_table(r: &CertReport) -> String {
    let mut s = format!("vertices {}  edges {}\n", r.vertices, r.edges);
    for c in &r.checks {
        s += &format!("{:<12} {:<4} {}\n", c.check, if c.passed { "pass" } else { "FAIL" }, c.violations);
    }
    for sl in &r.slack {
        s += &format!("slack {:<16} {:.6}\n", sl.check, sl.approx);
    }
    if r.boundary_contacts > 0 {
        s += &format!("cone boundary contacts {}\n", r.boundary_contacts);
    }
    for v in &r.marginal {
        s += &format!("marginal {:?} {}\n", v.kind, serde_json::to_string(&v.witness).unwrap_or_default());
    }
    for v in &r.violations {
        s += &format!("violation {:?} {}\n", v.kind, serde_json::to_string(&v.witness).unwrap_or_default());
    }
    s += if r.passed { "PASS\n" } else { "FAIL\n" };
    s
}

/// Certify a stored drawing. Without a graph file the graph is rebuilt from
/// the drawing's edges with ascending neighbour order.
pub fn verify_files(drawing: &Path, graph: Option<&Path>, profile: Option<Algorithm>) -> Result<CertReport> {
    let d = io::read_drawing(drawing)?;
    let g = match graph {
        Some(p) => io::read_graph(p)?,
        None => InputGraph::new(d.positions.len(), d.edges.iter().map(|e| (e.u, e.v)).collect())?,
    };
    let profile = profile.unwrap_or(d.algorithm);
    let structure = if classify(&g) == GraphClass::Unsupported {
        None
    } else {
        Some(Structure::for_drawing(&g, &d, profile)?)
    };
    certify(&d, structure.as_ref())
}

fn run(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match &cfg.command {
        Command::Triples { count, angle_sorted, format } => {
            out.write_all(triples_table(*count, *angle_sorted, *format)?.as_bytes())?;
            Ok(0)
        }
        Command::Draw { input, output, svg, algorithm, root } => {
            let mut g = io::read_graph(input)?;
            if let Some(r) = root {
                g = g.with_root(*r)?;
            }
            let (drawn, _) = draw_and_certify(&g, *algorithm, cfg.max_coord_bits)?;
            if let Some(p) = svg {
                std::fs::write(p, render_svg(&drawn.drawing))?;
            }
            emit(output, &io::drawing_to_json(&drawn.drawing), out)?;
            Ok(0)
        }
        Command::Verify { drawing, graph, profile, format } => {
            let report = verify_files(drawing, graph.as_deref(), *profile)?;
            let text = match format {
                ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
                ReportFormat::Table => report_table(&report),
            };
            out.write_all(text.as_bytes())?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Gen { kind, n, seed, params, output } => {
            let g = generate_random(*kind, *n, *seed, params)?;
            emit(output, &(io::graph_to_json(&g.graph) + "\n"), out)?;
            Ok(0)
        }
        Command::Bench { class, sizes, trials, seed, output } => {
            let rows = bench_bounds(*class, sizes, *trials, *seed)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(output, &String::from_utf8(buf).expect("csv is utf-8"), out)?;
            Ok(0)
        }
    }
}

/// Run one command; errors are printed to stderr and mapped to their exit
/// status.
pub fn run_pipeline(cfg: &RunConfig, out: &mut dyn Write) -> i32 {
    match run(cfg, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gridfary: {e}");
            e.exit_code()
        }
    }
}
