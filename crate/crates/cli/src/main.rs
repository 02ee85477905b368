use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use singgraph::catalog::ConfigClass;
use singgraph::dot::emit_dot;
use singgraph::generate::{gen_catalog, gen_chain, gen_cyclic};
use singgraph::report::{
    check_graph, CReport, ConfigReport, H1AReport, InvariantReport, LevelReport, ReportOptions,
    StepReport,
};
use singgraph::{analyze_graph, parse_graph, DualGraph, Error, Severity};

#[derive(Parser)]
#[command(name = "singgraph", version, about = "Invariants of rational surface singularities from resolution dual graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate graphs: schema, negative definiteness, rationality, almost reduced cycle.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Full invariant report.
    Report {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Include the iterated blowdown tower.
        #[arg(long)]
        tower: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// RDP configurations with their classes and the correction interval.
    Configs { file: PathBuf },
    /// One Tjurina contraction and the full tower.
    Blowdown { file: PathBuf },
    /// Generate a graph file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Write to this file instead of stdout.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Graphviz rendering with black and white vertices.
    Dot { file: PathBuf },
}

#[derive(Subcommand)]
enum GenKind {
    /// Chain with the given self-intersections, e.g. `gen chain -2 -3 -2`.
    Chain {
        #[arg(required = true, allow_negative_numbers = true)]
        weights: Vec<i64>,
    },
    /// Hirzebruch-Jung chain of the cyclic quotient 1/n(1, q).
    Cyclic { n: u64, q: u64 },
    /// Catalog row instance, e.g. `gen catalog 'ThreeA(q=2,m=1)' -3 -3 -3`.
    Catalog {
        class: String,
        #[arg(allow_negative_numbers = true)]
        weights: Vec<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Exit statuses, ordered so that the worst one wins across files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Ok = 0,
    Io = 1,
    Domain = 2,
    Internal = 3,
}

struct Failure {
    status: Status,
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.severity() {
            Severity::Domain => Status::Domain,
            Severity::Internal => Status::Internal,
        };
        Failure {
            status,
            code: e.code(),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn io(path: &Path, e: io::Error) -> Self {
        Failure {
            status: Status::Io,
            code: "io_error",
            message: format!("{}: {e}", path.display()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn load(path: &Path) -> Outcome<(Vec<u8>, DualGraph)> {
    let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| Failure::from(Error::Schema(e.to_string())))?;
    let g = parse_graph(&text)?;
    Ok((bytes, g))
}

fn diagnose(path: &Path, f: &Failure) {
    eprintln!("singgraph: {}: {}: {}", path.display(), f.code, f.message);
}

fn emit(text: &str, output: Option<&Path>) -> Outcome<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

/// Runs `f` on every file (in parallel when enabled), prints the outputs in
/// argument order and returns the worst status.
fn per_file(files: &[PathBuf], f: impl Fn(&Path) -> Outcome<String> + Sync + Send) -> Status {
    let results = singgraph::par::map(files, |p| f(p));
    let mut worst = Status::Ok;
    let mut out = io::stdout().lock();
    for (path, r) in files.iter().zip(results) {
        match r {
            Ok(text) => {
                if out.write_all(text.as_bytes()).is_err() {
                    worst = worst.max(Status::Io);
                }
            }
            Err(fail) => {
                diagnose(path, &fail);
                worst = worst.max(fail.status);
            }
        }
    }
    worst
}

fn check(path: &Path) -> Outcome<String> {
    let (_, g) = load(path)?;
    check_graph(&g)?;
    Ok(format!("{}: ok\n", path.display()))
}

fn report(path: &Path, tower: bool, format: Format) -> Outcome<String> {
    let (bytes, g) = load(path)?;
    let r = InvariantReport::build(&g, ReportOptions { tower }, Some(&bytes))?;
    Ok(match format {
        Format::Json => r.to_json(),
        Format::Text => r.to_text(),
    })
}

#[derive(Serialize)]
struct ConfigsOutput<'a> {
    configurations: &'a Option<Vec<ConfigReport>>,
    #[serde(rename = "h1_A")]
    h1_a: &'a Option<H1AReport>,
    c: &'a Option<CReport>,
    reasons: &'a std::collections::BTreeMap<&'static str, &'static str>,
}

fn configs(path: &Path) -> Outcome<String> {
    let (bytes, g) = load(path)?;
    let r = InvariantReport::build(&g, ReportOptions::default(), Some(&bytes))?;
    let b = &r.body;
    Ok(to_json(&ConfigsOutput {
        configurations: &b.configurations,
        h1_a: &b.h1_a,
        c: &b.c,
        reasons: &b.reasons,
    }))
}

#[derive(Serialize)]
struct BlowdownOutput<'a> {
    blowdown: &'a StepReport,
    tower: &'a Option<Vec<LevelReport>>,
}

fn blowdown(path: &Path) -> Outcome<String> {
    let (bytes, g) = load(path)?;
    let r = InvariantReport::build(&g, ReportOptions { tower: true }, Some(&bytes))?;
    Ok(to_json(&BlowdownOutput {
        blowdown: &r.body.blowdown,
        tower: &r.tower,
    }))
}

fn dot(path: &Path) -> Outcome<String> {
    let (_, g) = load(path)?;
    let a = analyze_graph(&g)?;
    let configs = a.configs.unwrap_or_default();
    Ok(emit_dot(&g, a.cycle.z(), &configs))
}

fn generate(kind: &GenKind) -> Outcome<DualGraph> {
    Ok(match kind {
        GenKind::Chain { weights } => gen_chain(weights)?,
        GenKind::Cyclic { n, q } => gen_cyclic(*n, *q)?,
        GenKind::Catalog { class, weights } => {
            let class: ConfigClass = class.parse()?;
            gen_catalog(class, weights)?
        }
    })
}

fn run_single(path: &Path, f: impl Fn(&Path) -> Outcome<String>) -> Status {
    match f(path).and_then(|text| emit(&text, None)) {
        Ok(()) => Status::Ok,
        Err(fail) => {
            diagnose(path, &fail);
            fail.status
        }
    }
}

fn run(cli: Cli) -> Status {
    match cli.command {
        Command::Check { files } => per_file(&files, check),
        Command::Report { files, tower, format } => per_file(&files, |p| report(p, tower, format)),
        Command::Configs { file } => run_single(&file, configs),
        Command::Blowdown { file } => run_single(&file, blowdown),
        Command::Dot { file } => run_single(&file, dot),
        Command::Gen { kind, output } => {
            match generate(&kind).and_then(|g| emit(&g.to_json(), output.as_deref())) {
                Ok(()) => Status::Ok,
                Err(fail) => {
                    eprintln!("singgraph: gen: {}: {}", fail.code, fail.message);
                    fail.status
                }
            }
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()) as u8)
}
