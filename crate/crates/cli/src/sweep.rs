use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Serialize;
use totalcolor::harness::{
    bound_sweep, conjecture_sweep, subgraph_monotonicity_scan, sweep_graphs, Anomaly,
    ConjectureId, ConjectureReport, ConjectureStatus, Evaluator, GraphChecks, BOUND_IDS,
};
use totalcolor::{Graph, Preset};

use crate::input::{parse_range, read_graph_file, BudgetArgs};
use crate::manifest::{input_digest, RunManifest, Tagged};

pub const N_CAP: usize = 7;

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Vertex counts, e.g. `3..5` or `4`; all connected F3s graphs in range.
    #[arg(long = "n", conflicts_with = "file", required_unless_present = "file")]
    pub n: Option<String>,
    /// File of graph6 lines to sweep instead of an enumerated range.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// `all` or comma-separated bound ids.
    #[arg(long, value_delimiter = ',')]
    pub bounds: Vec<String>,
    /// `all` or comma-separated conjecture ids, e.g. `c2,c3`.
    #[arg(long, value_delimiter = ',')]
    pub conjectures: Vec<String>,
    /// Presets to scan for subgraph anomalies (value rising under deletion).
    #[arg(long, value_delimiter = ',')]
    pub scan: Vec<String>,
    /// Include single-vertex deletions in the anomaly scan.
    #[arg(long)]
    pub scan_vertex_deletions: bool,
    #[arg(long, default_value = "sweep-out")]
    pub out: PathBuf,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Allow more than seven vertices.
    #[arg(long)]
    pub allow_large: bool,
    /// Drop witness colorings from the conjecture report.
    #[arg(long)]
    pub no_witness: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Serialize)]
struct BoundSummary {
    graphs: usize,
    checks: usize,
    applicable: usize,
    holds: usize,
    violated: usize,
    inconclusive: usize,
}

#[derive(Serialize)]
struct BoundRow<'a> {
    graph6: &'a str,
    bound_id: &'a str,
    hypothesis_met: bool,
    lhs: String,
    relation: String,
    rhs: String,
    holds: String,
    provenance: &'a str,
    detail: &'a str,
    reverified: String,
    manifest_digest: &'a str,
}

#[derive(Serialize)]
struct ConjectureRow<'a> {
    conjecture_id: String,
    graphs_checked: usize,
    applicable: usize,
    status: &'static str,
    timeouts: usize,
    counterexamples: usize,
    first_counterexample: &'a str,
    manifest_digest: &'a str,
}

#[derive(Serialize)]
struct AnomalyRow<'a> {
    preset: &'a str,
    parent: &'a str,
    child: &'a str,
    deletion: &'a str,
    parent_value: i64,
    child_value: i64,
    manifest_digest: &'a str,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn selected_bounds(raw: &[String]) -> Result<Option<BTreeSet<String>>> {
    if raw.is_empty() {
        return Ok(None);
    }
    if raw.iter().any(|b| b.eq_ignore_ascii_case("all")) {
        return Ok(Some(BOUND_IDS.iter().map(|s| s.to_string()).collect()));
    }
    let mut out = BTreeSet::new();
    for b in raw {
        let id = BOUND_IDS
            .iter()
            .find(|id| id.eq_ignore_ascii_case(b.trim()))
            .with_context(|| format!("unknown bound id {b:?}; known: {}", BOUND_IDS.join(", ")))?;
        out.insert(id.to_string());
    }
    Ok(Some(out))
}

fn selected_conjectures(raw: &[String]) -> Result<Vec<ConjectureId>> {
    if raw.iter().any(|c| c.eq_ignore_ascii_case("all")) {
        return Ok(ConjectureId::ALL.to_vec());
    }
    let mut ids = raw
        .iter()
        .map(|c| c.parse::<ConjectureId>().map_err(anyhow::Error::from))
        .collect::<Result<Vec<_>>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

fn write_json<T: Serialize>(path: &Path, digest: &str, body: T) -> Result<()> {
    let text = serde_json::to_string_pretty(&Tagged {
        manifest_digest: digest,
        body,
    })?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

fn write_csv<R: Serialize>(
    path: &Path,
    header: &[&str],
    rows: impl IntoIterator<Item = R>,
) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(path)
        .with_context(|| format!("writing {}", path.display()))?;
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Returns whether any bound was violated.
pub fn run(args: &SweepArgs) -> Result<bool> {
    if let Some(j) = args.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .context("starting worker pool")?;
    }
    let bounds = selected_bounds(&args.bounds)?;
    let conjectures = selected_conjectures(&args.conjectures)?;
    let scan = args
        .scan
        .iter()
        .map(|p| p.parse::<Preset>().map_err(anyhow::Error::from))
        .collect::<Result<Vec<_>>>()?;
    if bounds.is_none() && conjectures.is_empty() && scan.is_empty() {
        bail!("nothing to do: select --bounds, --conjectures or --scan");
    }

    let (range, graphs): (Option<(usize, usize)>, Vec<Graph>) = match (&args.n, &args.file) {
        (Some(n), _) => {
            let (lo, hi) = parse_range(n)?;
            check_cap(hi, args.allow_large)?;
            (Some((lo, hi)), sweep_graphs(lo, hi)?)
        }
        (None, Some(path)) => {
            let graphs = read_graph_file(path)?;
            check_cap(graphs.iter().map(Graph::n).max().unwrap_or(0), args.allow_large)?;
            if !conjectures.is_empty() {
                bail!("--conjectures needs an enumerated range (--n), not --file");
            }
            (None, graphs)
        }
        (None, None) => unreachable!("clap requires --n or --file"),
    };

    fs::create_dir_all(&args.out)
        .with_context(|| format!("creating output directory {}", args.out.display()))?;
    let budget = args.budget.budget()?;
    let mut manifest = RunManifest::start("sweep", input_digest(&graphs), budget);
    let digest = manifest.digest.clone();
    let ev = Evaluator::new(budget);
    let mut violated = false;

    if let Some(ids) = &bounds {
        let mut swept = bound_sweep(&graphs, &ev);
        for gc in &mut swept {
            gc.checks.retain(|c| ids.contains(&c.bound_id));
        }
        let all = || swept.iter().flat_map(|gc| gc.checks.iter().map(move |c| (gc, c)));
        let summary = BoundSummary {
            graphs: swept.len(),
            checks: all().count(),
            applicable: all().filter(|(_, c)| c.hypothesis_met).count(),
            holds: all().filter(|(_, c)| c.holds == Some(true)).count(),
            violated: all().filter(|(_, c)| c.violated()).count(),
            inconclusive: all().filter(|(_, c)| c.hypothesis_met && c.holds.is_none()).count(),
        };
        violated = summary.violated > 0;
        log::info!(
            "bounds: {} applicable checks, {} violated, {} inconclusive",
            summary.applicable,
            summary.violated,
            summary.inconclusive
        );
        #[derive(Serialize)]
        struct Body<'a> {
            summary: BoundSummary,
            graphs: &'a [GraphChecks],
        }
        write_json(&args.out.join("bounds.json"), &digest, Body { summary, graphs: &swept })?;
        write_csv(
            &args.out.join("bounds.csv"),
            &[
                "graph6", "bound_id", "hypothesis_met", "lhs", "relation", "rhs", "holds",
                "provenance", "detail", "reverified", "manifest_digest",
            ],
            all().map(|(gc, c)| BoundRow {
                graph6: &gc.graph6,
                bound_id: &c.bound_id,
                hypothesis_met: c.hypothesis_met,
                lhs: c.lhs.to_string(),
                relation: c.relation.to_string(),
                rhs: c.rhs.to_string(),
                holds: opt(c.holds),
                provenance: &c.provenance,
                detail: c.detail.as_deref().unwrap_or(""),
                reverified: opt(c.reverified),
                manifest_digest: &digest,
            }),
        )?;
        manifest.outputs.extend(["bounds.json".into(), "bounds.csv".into()]);
    }

    if !conjectures.is_empty() {
        let (lo, hi) = range.expect("checked above");
        let mut reports: Vec<ConjectureReport> = conjecture_sweep(lo, hi, &conjectures, &ev)?;
        if args.no_witness {
            for c in reports.iter_mut().flat_map(|r| r.counterexamples.iter_mut()) {
                c.witnesses.clear();
            }
        }
        #[derive(Serialize)]
        struct Body<'a> {
            reports: &'a [ConjectureReport],
        }
        write_json(&args.out.join("conjectures.json"), &digest, Body { reports: &reports })?;
        write_csv(
            &args.out.join("conjectures.csv"),
            &[
                "conjecture_id", "graphs_checked", "applicable", "status", "timeouts",
                "counterexamples", "first_counterexample", "manifest_digest",
            ],
            reports.iter().map(|r| {
                let (status, timeouts) = match r.status {
                    ConjectureStatus::NoCounterexampleFound => ("no_counterexample_found", 0),
                    ConjectureStatus::Counterexample => ("counterexample", 0),
                    ConjectureStatus::Inconclusive { timeouts } => ("inconclusive", timeouts),
                };
                ConjectureRow {
                    conjecture_id: r.conjecture_id.to_string(),
                    graphs_checked: r.graphs_checked,
                    applicable: r.applicable,
                    status,
                    timeouts,
                    counterexamples: r.counterexamples.len(),
                    first_counterexample: r
                        .counterexamples
                        .first()
                        .map(|c| c.graph6.as_str())
                        .unwrap_or(""),
                    manifest_digest: &digest,
                }
            }),
        )?;
        manifest.outputs.extend(["conjectures.json".into(), "conjectures.csv".into()]);
    }

    if !scan.is_empty() {
        let mut found: Vec<(Preset, Anomaly)> = Vec::new();
        for &p in &scan {
            for g in &graphs {
                found.extend(
                    subgraph_monotonicity_scan(g, p, &ev, args.scan_vertex_deletions)
                        .into_iter()
                        .map(|a| (p, a)),
                );
            }
        }
        found.sort_by(|a, b| {
            (a.0, &a.1.parent, &a.1.child, &a.1.deletion)
                .cmp(&(b.0, &b.1.parent, &b.1.child, &b.1.deletion))
        });
        #[derive(Serialize)]
        struct Item<'a> {
            preset: Preset,
            #[serde(flatten)]
            anomaly: &'a Anomaly,
        }
        #[derive(Serialize)]
        struct Body<'a> {
            presets: &'a [Preset],
            anomalies: Vec<Item<'a>>,
        }
        let anomalies = found.iter().map(|(p, a)| Item { preset: *p, anomaly: a }).collect();
        write_json(
            &args.out.join("anomalies.json"),
            &digest,
            Body { presets: &scan, anomalies },
        )?;
        write_csv(
            &args.out.join("anomalies.csv"),
            &[
                "preset", "parent", "child", "deletion", "parent_value", "child_value",
                "manifest_digest",
            ],
            found.iter().map(|(p, a)| AnomalyRow {
                preset: p.name(),
                parent: &a.parent,
                child: &a.child,
                deletion: &a.deletion,
                parent_value: a.parent_value,
                child_value: a.child_value,
                manifest_digest: &digest,
            }),
        )?;
        manifest.outputs.extend(["anomalies.json".into(), "anomalies.csv".into()]);
    }

    manifest.finish();
    let text = serde_json::to_string_pretty(&manifest)?;
    fs::write(args.out.join("manifest.json"), text + "\n")?;
    eprintln!(
        "swept {} graphs; wrote {} files to {}",
        graphs.len(),
        manifest.outputs.len() + 1,
        args.out.display()
    );
    Ok(violated)
}

fn check_cap(n: usize, allow_large: bool) -> Result<()> {
    if n <= N_CAP {
        return Ok(());
    }
    if !allow_large {
        bail!(
            "n = {n} exceeds the default cap of {N_CAP}; the number of graphs and the \
             solve time grow very fast. Pass --allow-large to run anyway"
        );
    }
    log::warn!("sweeping n = {n} beyond the default cap of {N_CAP}; expect long runtimes");
    Ok(())
}
