//! `totalcolor`: solve, verify, construct, check bounds and sweep.
//!
//! Exit codes: 0 success, 1 malformed input or other error, 2 a result
//! short of success (budget exhausted, verification failed, bound
//! violated), 3 no coloring exists.

mod input;
mod manifest;
mod sweep;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use totalcolor::construct::{
    all_distinct, bipartite_lift, compose_exact, cover_composition, extend_add_edge,
    extend_add_leaf, extend_add_leaves, ConstructionReport, CoverTarget,
};
use totalcolor::graph::to_graph6;
use totalcolor::harness::{run_bound_suite, BoundCheck, Evaluator};
use totalcolor::solver::{chromatic_number, SearchBudget, SolveStatus};
use totalcolor::{satisfies, ConstraintSet, Graph, Preset, TotalColoring};

use input::{parse_pair, read_coloring, BudgetArgs, ConstraintArgs, GraphArgs};
use manifest::{input_digest, RunManifest, Tagged};

#[derive(Parser)]
#[command(name = "totalcolor", version, about = "Distinguishing total colorings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact chromatic number under a preset or condition list.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        constraints: ConstraintArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Omit the optimal coloring from the output.
        #[arg(long)]
        no_witness: bool,
    },
    /// Check a coloring file against a preset or condition list.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        constraints: ConstraintArgs,
        /// JSON coloring: {"k": 5, "vertex_colors": [...], "edge_colors": [...]}.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Build and verify a coloring with an explicit recipe.
    Construct {
        #[arg(value_enum)]
        method: Method,
        #[command(flatten)]
        graph: GraphArgs,
        /// Input coloring: the base coloring for the extension methods, the
        /// edge coloring for bipartite_lift. Solved exactly when omitted.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Non-edge `U,V` for add_edge; defaults to the first non-edge.
        #[arg(long)]
        edge: Option<String>,
        /// Vertices receiving new leaves (add_leaf takes one).
        #[arg(long, value_delimiter = ',')]
        attach: Vec<usize>,
        /// Edge part for compose.
        #[arg(long, value_enum, default_value_t = EdgePart::ChiS)]
        edge_preset: EdgePart,
        /// Output condition for cover.
        #[arg(long, value_enum, default_value_t = Target::Mu)]
        target: Target,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Evaluate every registered bound on one graph.
    Bounds {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Bound, conjecture and anomaly sweeps over many graphs, written as
    /// CSV and JSON with a manifest.
    Sweep(sweep::SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Method {
    AllDistinct,
    Compose,
    Cover,
    BipartiteLift,
    AddEdge,
    AddLeaf,
    AddLeaves,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum EdgePart {
    ChiS,
    ChiAs,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Target {
    Mu,
    MuE,
}

const EXIT_OK: u8 = 0;
const EXIT_SHORT: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

fn print<T: Serialize>(manifest: &RunManifest, body: T) -> Result<()> {
    let tagged = Tagged {
        manifest_digest: &manifest.digest,
        body,
    };
    let text = serde_json::to_string_pretty(&tagged)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn solve(graph: &GraphArgs, cs: &ConstraintArgs, b: &BudgetArgs, no_witness: bool) -> Result<u8> {
    let g = graph.load()?;
    let cs = cs.load()?;
    let budget = b.budget()?;
    let manifest = RunManifest::start("solve", input_digest([&g]), budget);
    let r = chromatic_number(&g, &cs, budget)?;
    print(&manifest, r.record(&g, &cs, !no_witness)?)?;
    Ok(match r.status {
        SolveStatus::Exact => EXIT_OK,
        SolveStatus::LowerBoundOnly => EXIT_SHORT,
        SolveStatus::InfeasibleStructurally => EXIT_INFEASIBLE,
    })
}

fn verify(graph: &GraphArgs, cs: &ConstraintArgs, coloring: &PathBuf) -> Result<u8> {
    let g = graph.load()?;
    let cs = cs.load()?;
    let f = read_coloring(coloring)?;
    f.check_shape(&g, cs.mode())
        .with_context(|| format!("{} does not fit the graph", coloring.display()))?;
    let manifest = RunManifest::start("verify", input_digest([&g]), SearchBudget::default());
    let verdict = satisfies(&g, &f, &cs);
    #[derive(Serialize)]
    struct Body {
        graph6: String,
        constraint_set: ConstraintSet,
        #[serde(flatten)]
        verdict: totalcolor::Verdict,
    }
    let ok = verdict.ok;
    print(
        &manifest,
        Body {
            graph6: to_graph6(&g)?,
            constraint_set: cs,
            verdict,
        },
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_SHORT })
}

/// An exact optimal coloring of `g` under `p`.
fn optimal(g: &Graph, p: Preset, budget: SearchBudget) -> Result<TotalColoring> {
    let r = chromatic_number(g, &p.constraint_set(), budget)?;
    match (r.status, r.witness) {
        (SolveStatus::Exact, Some(w)) => Ok(w),
        (status, _) => bail!("no optimal {p} coloring to start from ({status})"),
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    method: Method,
    graph: &GraphArgs,
    coloring: Option<&PathBuf>,
    edge: Option<&str>,
    attach: &[usize],
    edge_preset: EdgePart,
    target: Target,
    b: &BudgetArgs,
) -> Result<u8> {
    let g = graph.load()?;
    let budget = b.budget()?;
    let manifest = RunManifest::start("construct", input_digest([&g]), budget);
    let given = coloring.map(read_coloring).transpose()?;
    let base = |p: Preset| -> Result<TotalColoring> {
        match &given {
            Some(f) => Ok(f.clone()),
            None => optimal(&g, p, budget),
        }
    };
    let report: ConstructionReport = match method {
        Method::AllDistinct => all_distinct(&g)?,
        Method::Compose => {
            let p = match edge_preset {
                EdgePart::ChiS => Preset::ChiS,
                EdgePart::ChiAs => Preset::ChiAs,
            };
            compose_exact(&g, p, budget)?
        }
        Method::Cover => {
            let t = match target {
                Target::Mu => CoverTarget::Mu,
                Target::MuE => CoverTarget::MuE,
            };
            cover_composition(&g, t, budget)?
        }
        Method::BipartiteLift => bipartite_lift(&g, &base(Preset::ChiAs)?, budget)?,
        Method::AddEdge => {
            let uv = match edge {
                Some(s) => parse_pair(s)?,
                None => (0..g.n())
                    .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
                    .find(|&(u, v)| !g.has_edge(u, v))
                    .context("graph is complete; no edge to add")?,
            };
            extend_add_edge(&g, &base(Preset::Mu)?, uv, budget)?
        }
        Method::AddLeaf => {
            let &[u] = attach else {
                bail!("add_leaf takes exactly one --attach vertex");
            };
            extend_add_leaf(&g, &base(Preset::Mu)?, u, budget)?
        }
        Method::AddLeaves => {
            if attach.is_empty() {
                bail!("add_leaves needs --attach");
            }
            extend_add_leaves(&g, &base(Preset::MuE)?, attach, budget)?
        }
    };
    let ok = report.certifies();
    print(&manifest, &report)?;
    Ok(if ok { EXIT_OK } else { EXIT_SHORT })
}

fn bounds(graph: &GraphArgs, b: &BudgetArgs) -> Result<u8> {
    let g = graph.load()?;
    let budget = b.budget()?;
    let manifest = RunManifest::start("bounds", input_digest([&g]), budget);
    let checks = run_bound_suite(&g, &Evaluator::new(budget));
    let violated = checks.iter().any(BoundCheck::violated);
    #[derive(Serialize)]
    struct Body {
        graph6: String,
        checks: Vec<BoundCheck>,
    }
    print(
        &manifest,
        Body {
            graph6: to_graph6(&g)?,
            checks,
        },
    )?;
    Ok(if violated { EXIT_SHORT } else { EXIT_OK })
}

fn run(cli: Cli) -> Result<u8> {
    match &cli.command {
        Command::Solve {
            graph,
            constraints,
            budget,
            no_witness,
        } => solve(graph, constraints, budget, *no_witness),
        Command::Verify {
            graph,
            constraints,
            coloring,
        } => verify(graph, constraints, coloring),
        Command::Construct {
            method,
            graph,
            coloring,
            edge,
            attach,
            edge_preset,
            target,
            budget,
        } => construct(
            *method,
            graph,
            coloring.as_ref(),
            edge.as_deref(),
            attach,
            *edge_preset,
            *target,
            budget,
        ),
        Command::Bounds { graph, budget } => bounds(graph, budget),
        Command::Sweep(args) => Ok(if sweep::run(args)? { EXIT_SHORT } else { EXIT_OK }),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
