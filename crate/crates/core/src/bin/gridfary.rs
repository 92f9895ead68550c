use clap::{Parser, Subcommand, ValueEnum};
use gridfary::bench::BenchClass;
use gridfary::embed::Algorithm;
use gridfary::generate::{GenKind, GenParams};
use gridfary::pipeline::{run_pipeline, Command, ReportFormat, RunConfig, TableFormat};
use std::path::PathBuf;
use std::process::ExitCode;

/// Integer-grid drawings with integer edge lengths for stars, trees and cacti.
///
/// Exit codes: 0 success, 1 verification found violations, 2 bad input,
/// 3 unsupported graph, 4 coordinate threshold exceeded, 5 self-check failed,
/// 6 internal error. GRIDFARY_MAX_COORD_BITS (default and maximum 62) sets
/// the coordinate threshold.
#[derive(Parser)]
#[command(name = "gridfary", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Star,
    Tree,
    Cactus,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Star => Algorithm::Star,
            Algo::Tree => Algorithm::Tree,
            Algo::Cactus => Algorithm::Cactus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFmt {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFmt {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Cactus,
    Star,
    Path,
    Balanced,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Star,
    Tree,
    Balanced,
    Cactus,
    CactusNoTriangles,
    CactusTriangles,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the first K primitive Pythagorean triples.
    Triples {
        /// Number of triples.
        #[arg(long)]
        count: usize,
        /// Order by slope instead of by generator parameters.
        #[arg(long)]
        angle_sorted: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFmt,
    },
    /// Draw a graph and write the drawing as JSON.
    Draw {
        /// Graph JSON file.
        input: PathBuf,
        /// Output file (default: stdout).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write an SVG rendering.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Force an algorithm (default: by graph class).
        #[arg(long, value_enum)]
        algorithm: Option<Algo>,
        /// Root vertex (default: the graph's root, else a center).
        #[arg(long)]
        root: Option<usize>,
    },
    /// Certify a drawing; exits 1 on violations.
    Verify {
        /// Drawing JSON file.
        drawing: PathBuf,
        /// Graph file with the rotation system the drawing was built from.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Bounds to check against (default: the drawing's algorithm).
        #[arg(long, value_enum)]
        profile: Option<Algo>,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFmt,
    },
    /// Generate a random graph.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Number of vertices.
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trees: maximum depth below the first vertex.
        #[arg(long)]
        depth_cap: Option<u64>,
        /// Cacti: exact number of cycles (default: random).
        #[arg(long)]
        cycles: Option<usize>,
        /// Cacti: chance in percent that a cycle is a triangle.
        #[arg(long, default_value_t = 30)]
        triangle_percent: u8,
        /// Cacti: longest cycle.
        #[arg(long, default_value_t = 12)]
        max_cycle_len: usize,
        /// Keep construction order as vertex ids.
        #[arg(long)]
        no_relabel: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Observed bounding boxes against the guaranteed grid size, as CSV.
    Bench {
        #[arg(long, value_enum)]
        class: Class,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_value = "250,500,1000,2000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn command(cmd: Cmd) -> Command {
    match cmd {
        Cmd::Triples { count, angle_sorted, format } => Command::Triples {
            count,
            angle_sorted,
            format: match format {
                TableFmt::Json => TableFormat::Json,
                TableFmt::Csv => TableFormat::Csv,
            },
        },
        Cmd::Draw { input, output, svg, algorithm, root } => {
            Command::Draw { input, output, svg, algorithm: algorithm.map(Into::into), root }
        }
        Cmd::Verify { drawing, graph, profile, format } => Command::Verify {
            drawing,
            graph,
            profile: profile.map(Into::into),
            format: match format {
                ReportFmt::Json => ReportFormat::Json,
                ReportFmt::Table => ReportFormat::Table,
            },
        },
        Cmd::Gen { kind, n, seed, depth_cap, cycles, triangle_percent, max_cycle_len, no_relabel, output } => Command::Gen {
            kind: match kind {
                Kind::Tree => GenKind::Tree,
                Kind::Cactus => GenKind::Cactus,
                Kind::Star => GenKind::Star,
                Kind::Path => GenKind::Path,
                Kind::Balanced => GenKind::Balanced,
            },
            n,
            seed,
            params: GenParams { depth_cap, cycles, triangle_percent, max_cycle_len, relabel: !no_relabel },
            output,
        },
        Cmd::Bench { class, sizes, trials, seed, output } => Command::Bench {
            class: match class {
                Class::Star => BenchClass::Star,
                Class::Tree => BenchClass::Tree,
                Class::Balanced => BenchClass::Balanced,
                Class::Cactus => BenchClass::Cactus,
                Class::CactusNoTriangles => BenchClass::CactusNoTriangles,
                Class::CactusTriangles => BenchClass::CactusTriangles,
            },
            sizes,
            trials,
            seed,
            output,
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cfg = match RunConfig::new(command(cli.command)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("gridfary: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let code = run_pipeline(&cfg, &mut std::io::stdout().lock());
    ExitCode::from(code as u8)
}
