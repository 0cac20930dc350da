use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bell_core::bell::build_bell;
use bell_core::clique::clique_census;
use bell_core::core_recon::reconstruct_core;
use bell_core::graph6::{parse_graph6, write_graph6};
use bell_core::json::{BellJson, MatchingGraphJson, MultigraphJson, RealizeJson};
use bell_core::matching::{build_matching_graph, realize_cycle, realize_tree};
use bell_core::tree_recon::reconstruct_tree;
use bell_core::verify::{run_suite, SUITES};
use bell_core::{Error, Graph};
use clap::{Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bell", version, about = "Bell coloring graphs of small simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build B_k(G) and print it as JSON.
    Build {
        #[arg(short = 'g', long = "graph")]
        graph: String,
        #[arg(short = 'k')]
        k: usize,
        /// Print the multigraph form {n_vertices, edges: [[i, j, multiplicity]]}.
        #[arg(long)]
        multigraph: bool,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Clique census of B_k(G).
    Classify {
        #[arg(short = 'g', long = "graph")]
        graph: String,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Certified realization of a tree or cycle as a Bell graph.
    Realize {
        #[command(subcommand)]
        target: RealizeTarget,
    },
    /// Recover T from B_3(T), given as Bell JSON or graph6.
    ReconstructTree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Recover the core of G from its Bell multigraph.
    ReconstructCore {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// The matching graph M_k(G).
    Matching {
        #[arg(short = 'g', long = "graph")]
        graph: String,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum RealizeTarget {
    /// A tree given in graph6.
    Tree { graph: String },
    /// The cycle C_m.
    Cycle { m: usize },
}

enum Failure {
    Parse(String),
    Precondition(String),
    Reconstruction(String),
    Counterexample(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Reconstruction(_) => 4,
            Failure::Counterexample(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Precondition(m) | Failure::Reconstruction(m) | Failure::Counterexample(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::MalformedGraph6(_) | Error::InvalidInput(_) | Error::IndexOutOfRange { .. } => Failure::Parse(msg),
            Error::NotPowerOfTwoOrder(_)
            | Error::NoBroomSolution { .. }
            | Error::NotATreeResult(_)
            | Error::NotABellTreeGraph(_)
            | Error::NotALineGraph(_)
            | Error::NotABellMultigraph(_) => Failure::Reconstruction(msg),
            Error::CounterexampleFound(_) | Error::CertificateMismatch(_) => Failure::Counterexample(msg),
            _ => Failure::Precondition(msg),
        }
    }
}

type Outcome = Result<(), Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn graph_arg(text: &str) -> Result<Graph, Failure> {
    Ok(parse_graph6(text)?)
}

fn budget(g: &Graph, k: usize) -> Outcome {
    if k == 0 || k > g.order() + 1 {
        return Err(Failure::Precondition(format!(
            "k = {k} is outside 1..={}; beyond n + 1 the Bell graph no longer changes",
            g.order() + 1
        )));
    }
    Ok(())
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn emit(text: String, out: Option<&PathBuf>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| Failure::Precondition(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(format!("bad JSON: {e}")))
}

fn tree_input(text: &str) -> Result<Graph, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        Ok(parse_json::<BellJson>(text)?.to_simple()?)
    } else {
        graph_arg(text)
    }
}

fn core_input(text: &str) -> Result<bell_core::Multigraph, Failure> {
    let value: serde_json::Value = parse_json(text)?;
    if value.get("n_vertices").is_some() {
        Ok(parse_json::<MultigraphJson>(text)?.to_multigraph()?)
    } else {
        Ok(parse_json::<BellJson>(text)?.to_multigraph()?)
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build { graph, k, multigraph, out } => {
            let g = graph_arg(&graph)?;
            budget(&g, k)?;
            let b = build_bell(&g, k);
            let text = if multigraph {
                json(&MultigraphJson::from_multigraph(&b.to_multigraph()))
            } else {
                json(&BellJson::from_bell(&b))
            };
            emit(text, out.as_ref())
        }
        Command::Classify { graph, k } => {
            let g = graph_arg(&graph)?;
            budget(&g, k)?;
            emit(json(&clique_census(&build_bell(&g, k))?), None)
        }
        Command::Realize { target } => {
            let cert = match target {
                RealizeTarget::Tree { graph } => realize_tree(&graph_arg(&graph)?)?,
                RealizeTarget::Cycle { m } => realize_cycle(m)?,
            };
            let report = RealizeJson::from_certificate(&cert);
            if !report.verified {
                return Err(Failure::Counterexample("certificate does not verify".into()));
            }
            emit(json(&report), None)
        }
        Command::ReconstructTree { input, verify } => {
            let b = tree_input(&read(&input)?)?;
            let r = reconstruct_tree(&b, verify)?;
            emit(format!("{}\n{}", write_graph6(&r.tree), json(&r.class)), None)
        }
        Command::ReconstructCore { input, verify } => {
            let bm = core_input(&read(&input)?)?;
            let r = reconstruct_core(&bm, verify)?;
            emit(format!("{}\n{}", write_graph6(&r.core), json(&r.trace)), None)
        }
        Command::Matching { graph, k } => {
            let g = graph_arg(&graph)?;
            emit(json(&MatchingGraphJson::new(&g, k, &build_matching_graph(&g, k))), None)
        }
        Command::Verify { suite, max_n } => {
            let start = Instant::now();
            let report = run_suite(&suite, max_n)?;
            eprintln!("{suite}: {} cases in {:.2?}", report.cases, start.elapsed());
            emit(json(&report), None)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Counterexample(format!("{} of {} cases failed", report.failures.len(), report.cases)))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("BELL_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // an already initialised pool is fine
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
