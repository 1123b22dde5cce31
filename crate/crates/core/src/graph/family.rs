use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
}

impl FamilyKind {
    fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "kb",
        }
    }
}

/// Builds a named graph. `Star` takes the total vertex count (vertex 0 is
/// the center), `CompleteBipartite` takes `(m, n)` with `m >= n` and puts
/// the `m` side first.
pub fn family(kind: FamilyKind, params: &[usize]) -> Result<Graph> {
    let bad = |msg: &str| Error::Family(format!("{}: {msg}", kind.name()));
    let one = || match params {
        [n] if *n >= 1 => Ok(*n),
        [_] => Err(bad("size must be positive")),
        _ => Err(bad("expects one size parameter")),
    };
    let g = match kind {
        FamilyKind::Path => {
            let n = one()?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))?
        }
        FamilyKind::Cycle => {
            let n = one()?;
            if n < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))?
        }
        FamilyKind::Star => {
            let n = one()?;
            Graph::new(n, (1..n).map(|i| (0, i)))?
        }
        FamilyKind::Complete => {
            let n = one()?;
            Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))?
        }
        FamilyKind::CompleteBipartite => {
            let (m, n) = match params {
                [m, n] if *n >= 1 && m >= n => (*m, *n),
                [_, _] => return Err(bad("expects m >= n >= 1")),
                _ => return Err(bad("expects two size parameters")),
            };
            Graph::new(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))))?
        }
    };
    let params: Vec<String> = params.iter().map(ToString::to_string).collect();
    Ok(g.with_label(format!("{}:{}", kind.name(), params.join(","))))
}

/// A family specifier such as `cycle:5` or `kb:3,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        family(self.kind, &self.params)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Family(format!("{s:?}: expected <kind>:<sizes>")))?;
        let kind = match name.trim().to_ascii_lowercase().as_str() {
            "path" | "p" => FamilyKind::Path,
            "cycle" | "c" => FamilyKind::Cycle,
            "star" => FamilyKind::Star,
            "complete" | "k" => FamilyKind::Complete,
            "kb" | "complete_bipartite" => FamilyKind::CompleteBipartite,
            other => return Err(Error::Family(format!("unknown family {other:?}"))),
        };
        let params = args
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Family(format!("{s:?}: bad size {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { kind, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(ToString::to_string).collect();
        write!(f, "{}:{}", self.kind.name(), params.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert_eq!((c5.n(), c5.q()), (5, 5));
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert!(c5.has_edge(0, 4));

        let star = family(FamilyKind::Star, &[4]).unwrap();
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);

        let k32 = family(FamilyKind::CompleteBipartite, &[3, 2]).unwrap();
        assert_eq!((k32.n(), k32.q()), (5, 6));
    }

    #[test]
    fn rejects_nonpositive_parameters() {
        assert!(family(FamilyKind::Path, &[0]).is_err());
        assert!(family(FamilyKind::CompleteBipartite, &[2, 3]).is_err());
        assert!(family(FamilyKind::CompleteBipartite, &[2, 0]).is_err());
        assert!(family(FamilyKind::Cycle, &[2]).is_err());
    }

    #[test]
    fn parses_specifiers() {
        let spec: FamilySpec = "kb:3,2".parse().unwrap();
        assert_eq!(spec.kind, FamilyKind::CompleteBipartite);
        assert_eq!(spec.params, vec![3, 2]);
        assert_eq!(spec.to_string(), "kb:3,2");
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("cycle:x".parse::<FamilySpec>().is_err());
    }
}
