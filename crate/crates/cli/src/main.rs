use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use depthkit::bigraph::{self, DegreeLabels, GraphJson, InclusionGraph};
use depthkit::depth::{self, DepthError, DepthReport, IdealSpec};
use depthkit::io::{self, ParseError};
use depthkit::sym::{self, DepthBound, GroupError, DEFAULT_GROUP_LIMIT};
use depthkit::tower::{verify_relations, FrobeniusSystem, TowerError, VerificationReport, VerifyOptions};

const MAX_SYM_DEGREE: usize = 8;
/// Largest tower basis the `tower` command will enumerate.
const MAX_TOWER_BASIS: usize = 50_000;
const DEFAULT_TOWER_LEVEL: usize = 3;

#[derive(Parser)]
#[command(name = "depthkit", version, about = "Subring depth and Frobenius tower computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print JSON instead of a text summary
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum depth of an inclusion matrix
    Depth {
        matrix: PathBuf,
        /// 1-based columns of a two-sided ideal, e.g. 1,2,3
        #[arg(long, value_delimiter = ',')]
        ideal: Option<Vec<usize>>,
        /// Write the inclusion graph as Graphviz DOT
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Branching matrix and depth of S_n in S_{n+1}
    Sym {
        n: usize,
        /// Also write the branching matrix in the matrix text format
        #[arg(long)]
        matrix_out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Combinatorial depth of a subgroup pair
    Combdepth {
        spec: PathBuf,
        /// Largest depth to search; defaults to the normalizer bound
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Verify the tower identities for a subgroup pair
    Tower {
        spec: PathBuf,
        /// Largest number of tensor factors; overrides the spec's `level` line
        #[arg(long)]
        level: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run on a deliberately broken coordinate system
        #[arg(long, hide = true)]
        corrupt: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Inclusion graph and graph-method depths
    Graph {
        matrix: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Labels for the white (subring) vertices, e.g. degrees
        #[arg(long, value_delimiter = ',')]
        white_labels: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        black_labels: Option<Vec<u64>>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0} identities failed")]
    Failed(usize),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Resource(_) => 4,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<DepthError> for CliError {
    fn from(e: DepthError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<TowerError> for CliError {
    fn from(e: TowerError) -> Self {
        match e {
            TowerError::Group(g) => g.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn group_limit() -> Result<usize, CliError> {
    match std::env::var("DEPTHKIT_MAX_GROUP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Parse(format!("DEPTHKIT_MAX_GROUP: bad value {v:?}"))),
        Err(_) => Ok(DEFAULT_GROUP_LIMIT),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn summary(report: &DepthReport) -> String {
    format!(
        "depth {} (odd {}, even {})",
        report.min_depth, report.min_odd_depth, report.min_even_depth
    )
}

fn run_depth(matrix: &Path, ideal: Option<Vec<usize>>, dot: Option<PathBuf>, out: &Output) -> Result<(), CliError> {
    let m = io::parse_matrix(&read(matrix)?)?;
    let report = match ideal {
        Some(cols) => depth::ideal_depth(&m, &IdealSpec::from_one_based(cols)?)?,
        None => depth::min_depth(&m)?,
    };
    let graph = InclusionGraph::from_matrix(&m)?;
    if let Some(path) = dot {
        write(&path, &graph.to_dot(None))?;
    }
    if out.json {
        print_json(&report);
    } else {
        match &report.ideal_rows {
            Some(rows) => println!("ideal {} over rows {:?}", summary(&report), rows),
            None => println!("{}", summary(&report)),
        }
        let check = bigraph::cross_check(&m)?;
        if !check.agrees() {
            println!(
                "warning: graph method gives odd {} / even {}",
                check.graph_odd_depth, check.graph_even_depth
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SymOutput {
    n: usize,
    matrix: Vec<Vec<u64>>,
    report: DepthReport,
}

fn run_sym(n: usize, matrix_out: Option<PathBuf>, dot: Option<PathBuf>, out: &Output) -> Result<(), CliError> {
    if !(1..=MAX_SYM_DEGREE).contains(&n) {
        return Err(CliError::Invalid(format!("n must be in 1..={MAX_SYM_DEGREE}, got {n}")));
    }
    let m = sym::branching_matrix(n)?;
    let report = depth::min_depth(&m)?;
    if let Some(path) = matrix_out {
        write(&path, &m.to_string())?;
    }
    if let Some(path) = dot {
        let names = |k: usize| sym::partitions(k).iter().map(ToString::to_string).collect();
        let labels = DegreeLabels {
            white: names(n),
            black: names(n + 1),
        };
        write(&path, &InclusionGraph::from_matrix(&m)?.to_dot(Some(&labels)))?;
    }
    if out.json {
        let matrix = m.to_u64_rows().expect("branching multiplicities are 0 or 1");
        print_json(&SymOutput { n, matrix, report });
    } else {
        print!("{m}");
        println!("S_{n} in S_{}: {}", n + 1, summary(&report));
    }
    Ok(())
}

#[derive(Serialize)]
struct CombOutput {
    d_c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    d_c_at_least: Option<usize>,
    normalizer_bound: usize,
    normal: bool,
    improper: bool,
    group_order: usize,
    subgroup_order: usize,
}

fn run_combdepth(spec: &Path, cap: Option<usize>, out: &Output) -> Result<(), CliError> {
    let limit = group_limit()?;
    let (g, h) = io::parse_group_spec(&read(spec)?)?.build(limit)?;
    let bound = sym::normalizer_bound(&g, &h)?;
    let result = sym::combinatorial_depth(&g, &h, cap.unwrap_or(bound.max(2)), limit)?;
    let (d_c, d_c_at_least) = match result.depth {
        DepthBound::Exact(d) => (Some(d), None),
        DepthBound::AtLeast(d) => (None, Some(d)),
    };
    let report = CombOutput {
        d_c,
        d_c_at_least,
        normalizer_bound: bound,
        normal: result.normal,
        improper: result.improper,
        group_order: g.order(),
        subgroup_order: h.order(),
    };
    if out.json {
        print_json(&report);
    } else {
        match (d_c, d_c_at_least) {
            (Some(d), _) => println!("combinatorial depth {d}"),
            (_, Some(d)) => println!("combinatorial depth at least {d}"),
            _ => unreachable!(),
        }
        println!("normalizer bound {bound}, normal: {}", result.normal);
    }
    Ok(())
}

fn run_tower(spec: &Path, level: Option<usize>, seed: u64, corrupt: bool, out: &Output) -> Result<(), CliError> {
    let spec = io::parse_group_spec(&read(spec)?)?;
    let level = level.or(spec.level).unwrap_or(DEFAULT_TOWER_LEVEL);
    if level < 2 {
        return Err(CliError::Invalid(format!("level must be at least 2, got {level}")));
    }
    let (g, h) = spec.build(group_limit()?)?;
    let mut sys = FrobeniusSystem::new(g, &h)?;
    if corrupt {
        sys = sys.corrupted();
    }
    if sys.basis_size(level) > MAX_TOWER_BASIS {
        return Err(CliError::Resource(format!(
            "level {level} has {} basis tensors, above the limit {MAX_TOWER_BASIS}",
            sys.basis_size(level)
        )));
    }
    let report: VerificationReport = verify_relations(&sys, &VerifyOptions::new(level).with_seed(seed))?;
    if out.json {
        print_json(&report);
    } else {
        for c in &report.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            println!("{status:4} {} (levels {:?}, {} cases)", c.name, c.levels_checked, c.cases);
            if let Some(ce) = &c.counterexample {
                println!("     {ce}");
            }
        }
        println!("generator criterion: {}", report.generator_criterion);
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    if report.all_passed {
        Ok(())
    } else {
        Err(CliError::Failed(failed.max(1)))
    }
}

#[derive(Serialize)]
struct GraphOutput {
    graph: GraphJson,
    odd_depth: usize,
    even_depth: usize,
    min_depth: usize,
}

fn run_graph(
    matrix: &Path,
    dot: Option<PathBuf>,
    white: Option<Vec<u64>>,
    black: Option<Vec<u64>>,
    out: &Output,
) -> Result<(), CliError> {
    let m = io::parse_matrix(&read(matrix)?)?;
    let graph = InclusionGraph::from_matrix(&m)?;
    if let Some(path) = dot {
        let labels = (white.is_some() || black.is_some())
            .then(|| DegreeLabels::from_numbers(&white.unwrap_or_default(), &black.unwrap_or_default()));
        write(&path, &graph.to_dot(labels.as_ref()))?;
    }
    let report = GraphOutput {
        graph: graph.to_json(),
        odd_depth: graph.odd_depth(),
        even_depth: graph.even_depth(),
        min_depth: graph.min_depth(),
    };
    if out.json {
        print_json(&report);
    } else {
        println!(
            "{} white, {} black, {} edges; depth {} (odd {}, even {})",
            graph.white(),
            graph.black(),
            report.graph.edges.len(),
            report.min_depth,
            report.odd_depth,
            report.even_depth
        );
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Depth { matrix, ideal, dot, out } => run_depth(&matrix, ideal, dot, &out),
        Command::Sym { n, matrix_out, dot, out } => run_sym(n, matrix_out, dot, &out),
        Command::Combdepth { spec, cap, out } => run_combdepth(&spec, cap, &out),
        Command::Tower { spec, level, seed, corrupt, out } => run_tower(&spec, level, seed, corrupt, &out),
        Command::Graph {
            matrix,
            dot,
            white_labels,
            black_labels,
            out,
        } => run_graph(&matrix, dot, white_labels, black_labels, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("depthkit: {e}");
            ExitCode::from(e.code())
        }
    }
}
