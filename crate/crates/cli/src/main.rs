//! `euler`: generate, classify, construct, and count over the graph text
//! format, with JSON reports for counting and search.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use euler_core::counting::{self, ConventionPolicy, SearchMode};
use euler_core::eulerian;
use euler_core::oracle;
use euler_core::twoway::{self, Family, FamilySpec, Multiplicity};
use euler_core::{Error, MultiGraph, Multidigraph};

#[derive(Parser)]
#[command(
    name = "euler",
    about = "Eulerian multidigraph toolkit: classification, circuit extraction, and exact counting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an undirected family graph in the text format.
    Generate(GenerateArgs),
    /// Classify a graph as CircuitEulerian, PathEulerian, or NotEulerian.
    Classify(InputArgs),
    /// Print the Eulerian circuit of a circuit-Eulerian graph.
    Circuit(InputArgs),
    /// Print the Eulerian dipath of a path-Eulerian graph.
    Path(InputArgs),
    /// Count Eulerian circuits; prints a JSON report per convention.
    Count(CountArgs),
    /// Search for the maximum Eulerian-circuit count over bounded multigraphs.
    Fstar(FstarArgs),
    /// Run the exhaustive small-universe checks against brute-force search.
    Selftest,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family: post, asterisk, circuit, complete, tree, or random.
    #[arg(long, required_unless_present = "manifest")]
    family: Option<Family>,
    /// Vertex count.
    #[arg(long, required_unless_present = "manifest")]
    n: Option<usize>,
    /// Seed for the tree and random families.
    #[arg(long)]
    seed: Option<u64>,
    /// Edge bound for the random family.
    #[arg(long)]
    max_edges: Option<usize>,
    /// Uniform edge multiplicity applied to the generated graph.
    #[arg(long)]
    mu: Option<u32>,
    /// Read the full generation spec from a JSON manifest instead of flags.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Write a DOT rendering of the generated graph to this path.
    #[arg(long)]
    emit_dot: Option<PathBuf>,
}

#[derive(Args)]
struct InputArgs {
    /// Read the graph from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Treat the input as undirected and double it before acting.
    #[arg(long)]
    double: bool,
    /// Write a DOT rendering of the graph being acted on to this path.
    #[arg(long)]
    emit_dot: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    input: InputArgs,
    /// cyclic, fixed-start:<v>, fixed-start:max, or all-rotations.
    /// Without this flag all three conventions are reported.
    #[arg(long)]
    convention: Option<String>,
    /// Edge limit for the exhaustive enumerator; forces enumeration.
    #[arg(long)]
    limit: Option<usize>,
    /// Pretty-print the JSON output.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct FstarArgs {
    /// Vertex count of the candidate multigraphs.
    #[arg(long)]
    n: usize,
    /// exhaustive (n <= 3) or randomized.
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    /// Seed for randomized mode.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidate budget for randomized mode.
    #[arg(long, default_value_t = 100)]
    budget: usize,
    /// Scoring convention policy; defaults to fixed-start:max.
    #[arg(long, default_value = "fixed-start:max")]
    convention: String,
    /// Pretty-print the JSON output.
    #[arg(long)]
    pretty: bool,
}

/// Exit 0 on success, 1 on domain errors, 2 on usage and parse errors.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Classify(args) => classify(args),
        Command::Circuit(args) => circuit(args),
        Command::Path(args) => path(args),
        Command::Count(args) => count(args),
        Command::Fstar(args) => fstar(args),
        Command::Selftest => selftest(),
    }
}

fn generate(args: GenerateArgs) -> Result<(), Failure> {
    let spec = match &args.manifest {
        Some(path) => {
            let text = read_file(path)?;
            serde_json::from_str::<FamilySpec>(&text)
                .map_err(|e| Failure::usage(format!("bad manifest {}: {e}", path.display())))?
        }
        None => {
            let mut spec = FamilySpec::new(
                args.family.expect("clap enforces family without manifest"),
                args.n.expect("clap enforces n without manifest"),
            );
            spec.seed = args.seed;
            spec.max_edges = args.max_edges;
            spec.multiplicity = args.mu.map(Multiplicity::Uniform);
            spec
        }
    };
    let graph = twoway::generate(&spec)?;
    if let Some(dot_path) = &args.emit_dot {
        write_file(dot_path, &graph.to_dot())?;
    }
    let mut header = format!("# euler generate family={} n={}", spec.family, spec.n);
    if let Some(seed) = spec.seed {
        header.push_str(&format!(" seed={seed}"));
    }
    if let Some(max_edges) = spec.max_edges {
        header.push_str(&format!(" max-edges={max_edges}"));
    }
    if let Some(Multiplicity::Uniform(k)) = &spec.multiplicity {
        header.push_str(&format!(" mu={k}"));
    }
    println!("{header}");
    print!("{}", graph.to_text());
    Ok(())
}

fn classify(args: InputArgs) -> Result<(), Failure> {
    let graph = load_digraph(&args)?;
    let verdict = eulerian::classify(&graph)?;
    println!("{verdict}");
    Ok(())
}

fn circuit(args: InputArgs) -> Result<(), Failure> {
    let graph = load_digraph(&args)?;
    let trail = eulerian::find_euler_circuit(&graph)?;
    println!("{trail}");
    println!("edges: {}", format_edge_ids(trail.edge_ids()));
    Ok(())
}

fn path(args: InputArgs) -> Result<(), Failure> {
    let graph = load_digraph(&args)?;
    let trail = eulerian::find_euler_path(&graph)?;
    println!("{trail}");
    println!("edges: {}", format_edge_ids(trail.edge_ids()));
    Ok(())
}

fn format_edge_ids(ids: &[euler_core::EdgeId]) -> String {
    ids.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn count(args: CountArgs) -> Result<(), Failure> {
    let graph = load_digraph(&args.input)?;
    let policies = match &args.convention {
        Some(raw) => vec![parse_policy(raw)?],
        None => vec![
            ConventionPolicy::Cyclic,
            ConventionPolicy::FixedStartMaxOutDegree,
            ConventionPolicy::AllRotations,
        ],
    };
    let mut reports = Vec::with_capacity(policies.len());
    for policy in policies {
        if let ConventionPolicy::FixedStart(v) = policy {
            if v.index() >= graph.vertex_count() {
                return Err(Failure::domain(format!(
                    "start vertex {v} out of range for a graph on {} vertices",
                    graph.vertex_count()
                )));
            }
        }
        let convention = policy.resolve(&graph);
        let report = match args.limit {
            None => counting::count(&graph, convention)?,
            Some(limit) => {
                let started = std::time::Instant::now();
                let cyclic = counting::enumerate_circuits(
                    &graph,
                    counting::Convention::CyclicRotation,
                    limit,
                )?;
                counting::CountReport {
                    convention,
                    count: counting::scale_from_cyclic(&cyclic, convention, &graph),
                    method: counting::CountMethod::Enumeration,
                    graph: graph.to_text(),
                    elapsed_ms: started.elapsed().as_millis() as u64,
                }
            }
        };
        reports.push(report);
    }
    let json = if reports.len() == 1 {
        to_json(&reports[0], args.pretty)?
    } else {
        to_json(&reports, args.pretty)?
    };
    println!("{json}");
    Ok(())
}

fn fstar(args: FstarArgs) -> Result<(), Failure> {
    let mode = match args.mode.as_str() {
        "exhaustive" => SearchMode::Exhaustive,
        "randomized" => SearchMode::Randomized { seed: args.seed, budget: args.budget },
        other => {
            return Err(Failure::usage(format!(
                "unknown mode '{other}' (expected exhaustive or randomized)"
            )))
        }
    };
    let policy = parse_policy(&args.convention)?;
    let report = counting::fstar_search(args.n, mode, policy)?;
    println!("{}", to_json(&report, args.pretty)?);
    Ok(())
}

fn selftest() -> Result<(), Failure> {
    let checks = oracle::run_selftest();
    let mut all_passed = true;
    for check in &checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        println!("{}: {status} ({})", check.name, check.detail);
        all_passed &= check.passed;
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::domain("selftest failed"))
    }
}

fn parse_policy(raw: &str) -> Result<ConventionPolicy, Failure> {
    raw.parse::<ConventionPolicy>().map_err(Failure::usage)
}

fn to_json<T: serde::Serialize>(value: &T, pretty: bool) -> Result<String, Failure> {
    let result = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    result.map_err(|e| Failure::domain(format!("serialization failed: {e}")))
}

fn load_digraph(args: &InputArgs) -> Result<Multidigraph, Failure> {
    let text = match &args.input {
        Some(path) => read_file(path)?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
            buf
        }
    };
    let graph = if args.double {
        twoway::double(&MultiGraph::parse(&text)?)
    } else {
        Multidigraph::parse(&text)?
    };
    if let Some(dot_path) = &args.emit_dot {
        write_file(dot_path, &graph.to_dot())?;
    }
    Ok(graph)
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::domain(format!("writing {}: {e}", path.display())))
}
