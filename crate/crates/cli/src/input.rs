use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::Args;
use totalcolor::graph::{parse_graph6, FamilySpec};
use totalcolor::solver::{SearchBudget, DEFAULT_MAX_NODES, DEFAULT_MAX_SECONDS};
use totalcolor::{Condition, ConstraintSet, Graph, Mode, Preset, TotalColoring};

/// Exactly one way of naming a graph.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphArgs {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File holding one graph6 line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Named family, e.g. `cycle:5`, `star:4`, `complete:5`, `kb:3,2`.
    #[arg(long)]
    pub family: Option<String>,
}

impl GraphArgs {
    pub fn load(&self) -> Result<Graph> {
        if let Some(text) = &self.graph6 {
            return parse_graph6(text.trim()).with_context(|| format!("reading graph6 {text:?}"));
        }
        if let Some(spec) = &self.family {
            let spec: FamilySpec = spec.parse()?;
            return Ok(spec.build()?);
        }
        let path = self.file.as_ref().expect("clap requires one source");
        let mut graphs = read_graph_file(path)?;
        if graphs.len() != 1 {
            bail!("{} holds {} graphs, expected one", path.display(), graphs.len());
        }
        Ok(graphs.remove(0))
    }
}

/// Every graph6 line of a file; blank lines and `#` comments are skipped.
pub fn read_graph_file(path: &PathBuf) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            parse_graph6(l).with_context(|| format!("{} line {}", path.display(), i + 1))
        })
        .collect()
}

/// A named preset or an explicit condition list.
#[derive(Args, Debug, Clone)]
pub struct ConstraintArgs {
    /// Named variant, e.g. `all8`, `mu`, `chi_s`.
    #[arg(long, conflicts_with = "conditions")]
    pub preset: Option<String>,
    /// Comma-separated conditions, e.g. `C1,C7`.
    #[arg(long, value_delimiter = ',')]
    pub conditions: Vec<String>,
    /// Which elements are colored when `--conditions` is used.
    #[arg(long, default_value = "total", requires = "conditions")]
    pub mode: String,
}

impl ConstraintArgs {
    pub fn load(&self) -> Result<ConstraintSet> {
        if let Some(p) = &self.preset {
            return Ok(p.parse::<Preset>()?.constraint_set());
        }
        if self.conditions.is_empty() {
            bail!("give --preset or --conditions");
        }
        let mode: Mode = self.mode.parse()?;
        let conditions = self
            .conditions
            .iter()
            .map(|c| c.parse::<Condition>())
            .collect::<totalcolor::Result<Vec<_>>>()?;
        Ok(ConstraintSet::new(mode, conditions)?)
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    /// Search nodes allowed per palette size.
    #[arg(long, env = "TOTALCOLOR_MAX_NODES", default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
    /// Wall-clock seconds allowed per palette size.
    #[arg(long, env = "TOTALCOLOR_MAX_SECONDS", default_value_t = DEFAULT_MAX_SECONDS as f64)]
    pub max_seconds: f64,
}

impl BudgetArgs {
    pub fn budget(&self) -> Result<SearchBudget> {
        if !(self.max_seconds.is_finite() && self.max_seconds > 0.0) {
            bail!("--max-seconds must be positive");
        }
        Ok(SearchBudget::new(
            self.max_nodes,
            Duration::from_secs_f64(self.max_seconds),
        )?)
    }
}

pub fn read_coloring(path: &PathBuf) -> Result<TotalColoring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing coloring {}", path.display()))
}

/// `3..5`, `3..=5` or a single `5`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().with_context(|| format!("bad range {s:?}"))?;
    let hi: usize = hi.trim().parse().with_context(|| format!("bad range {s:?}"))?;
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

pub fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .with_context(|| format!("expected U,V, got {s:?}"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), (3, 5));
        assert_eq!(parse_range("3..=5").unwrap(), (3, 5));
        assert_eq!(parse_range("9").unwrap(), (9, 9));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
