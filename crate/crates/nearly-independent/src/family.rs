//! Parametric graph families: paths, cycles, stars, brooms, lollipops,
//! tadpoles and friends, with a `name:param[:param]` text form used by the
//! command line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid {family} parameters: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error("family order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("cannot parse family spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named graph family instance.
///
/// * `Broom { n, k }`: path on `k` vertices with `n-k` pendant vertices
///   attached to one end-vertex.
/// * `Lollipop { n, k }`: path on `k` vertices with a complete graph on
///   `n-k` vertices fully joined to one end-vertex.
/// * `Tadpole { n, k }`: path on `k` vertices plus a path on `n-k` vertices
///   whose two end-vertices both attach to one end-vertex of the first path,
///   forming a cycle of length `n-k+1` with a pendant tail.
/// * `UnicyclicStar { n }`: the star on `n` vertices plus one extra edge
///   between two leaves (all choices are isomorphic; the two lowest-indexed
///   leaves are used for determinism).
/// * `MatchingPlusIsolated { pairs, isolated }`: `pairs`·K2 ∪ `isolated`·K1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Star { n: usize },
    CompleteBipartite { r: usize, s: usize },
    Wheel { n: usize },
    Broom { n: usize, k: usize },
    Lollipop { n: usize, k: usize },
    Tadpole { n: usize, k: usize },
    UnicyclicStar { n: usize },
    MatchingPlusIsolated { pairs: usize, isolated: usize },
    Edgeless { n: usize },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Broom { .. } => "broom",
            FamilySpec::Lollipop { .. } => "lollipop",
            FamilySpec::Tadpole { .. } => "tadpole",
            FamilySpec::UnicyclicStar { .. } => "unicyclic-star",
            FamilySpec::MatchingPlusIsolated { .. } => "matching",
            FamilySpec::Edgeless { .. } => "edgeless",
        }
    }

    /// Number of vertices of the described graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Broom { n, .. }
            | FamilySpec::Lollipop { n, .. }
            | FamilySpec::Tadpole { n, .. }
            | FamilySpec::UnicyclicStar { n }
            | FamilySpec::Edgeless { n } => n,
            FamilySpec::CompleteBipartite { r, s } => r + s,
            FamilySpec::MatchingPlusIsolated { pairs, isolated } => 2 * pairs + isolated,
        }
    }

    /// Checks the per-family parameter ranges.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let fail = |reason: String| {
            Err(FamilyError::InvalidParameters { family: self.name(), reason })
        };
        match *self {
            FamilySpec::Path { .. } | FamilySpec::Complete { .. } | FamilySpec::Edgeless { .. } => {
                Ok(())
            }
            FamilySpec::MatchingPlusIsolated { .. } => Ok(()),
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return fail(format!("cycle needs n >= 3, got n = {n}"));
                }
                Ok(())
            }
            FamilySpec::Star { n } => {
                if n < 1 {
                    return fail("star needs n >= 1".into());
                }
                Ok(())
            }
            FamilySpec::CompleteBipartite { r, s } => {
                if r < 1 || s < 1 {
                    return fail(format!("parts must be nonempty, got r = {r}, s = {s}"));
                }
                Ok(())
            }
            FamilySpec::Wheel { n } => {
                if n < 4 {
                    return fail(format!("wheel needs n >= 4, got n = {n}"));
                }
                Ok(())
            }
            FamilySpec::Broom { n, k } | FamilySpec::Lollipop { n, k } => {
                if k < 2 || n < k {
                    return fail(format!("needs k >= 2 and n >= k, got n = {n}, k = {k}"));
                }
                Ok(())
            }
            FamilySpec::Tadpole { n, k } => {
                if k < 2 || n < k + 2 {
                    return fail(format!("needs k >= 2 and n-k >= 2, got n = {n}, k = {k}"));
                }
                Ok(())
            }
            FamilySpec::UnicyclicStar { n } => {
                if n < 3 {
                    return fail(format!("needs n >= 3, got n = {n}"));
                }
                Ok(())
            }
        }
    }

    /// Builds the described graph.
    pub fn construct(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let order = self.order();
        if order > MAX_VERTICES {
            return Err(FamilyError::OrderTooLarge(order));
        }
        let g = match *self {
            FamilySpec::Edgeless { n } => Graph::edgeless(n)?,
            FamilySpec::Path { n } => Graph::build(n, &path_edges(n))?,
            FamilySpec::Cycle { n } => {
                let mut edges = path_edges(n);
                edges.push((n - 1, 0));
                Graph::build(n, &edges)?
            }
            FamilySpec::Complete { n } => {
                let edges: Vec<_> = all_pairs(n);
                Graph::build(n, &edges)?
            }
            FamilySpec::Star { n } => {
                let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Graph::build(n, &edges)?
            }
            FamilySpec::CompleteBipartite { r, s } => {
                let edges: Vec<_> = (0..r)
                    .flat_map(|u| (r..r + s).map(move |v| (u, v)))
                    .collect();
                Graph::build(r + s, &edges)?
            }
            FamilySpec::Wheel { n } => {
                let rim = FamilySpec::Cycle { n: n - 1 }.construct()?;
                rim.join(&Graph::edgeless(1)?)?
            }
            FamilySpec::Broom { n, k } => {
                // pendants attach to the last path vertex k-1
                let mut edges = path_edges(k);
                edges.extend((k..n).map(|v| (k - 1, v)));
                Graph::build(n, &edges)?
            }
            FamilySpec::Lollipop { n, k } => {
                let mut edges = path_edges(k);
                for (u, v) in all_pairs(n - k) {
                    edges.push((k + u, k + v));
                }
                edges.extend((k..n).map(|v| (k - 1, v)));
                Graph::build(n, &edges)?
            }
            FamilySpec::Tadpole { n, k } => {
                let mut edges = path_edges(k);
                edges.extend((k + 1..n).map(|v| (v - 1, v)));
                edges.push((k - 1, k));
                edges.push((k - 1, n - 1));
                Graph::build(n, &edges)?
            }
            FamilySpec::UnicyclicStar { n } => {
                let mut edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
                edges.push((1, 2));
                Graph::build(n, &edges)?
            }
            FamilySpec::MatchingPlusIsolated { pairs, isolated } => {
                let edges: Vec<_> = (0..pairs).map(|i| (2 * i, 2 * i + 1)).collect();
                Graph::build(2 * pairs + isolated, &edges)?
            }
        };
        Ok(g)
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (v - 1, v)).collect()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::UnicyclicStar { n }
            | FamilySpec::Edgeless { n } => write!(f, "{}:{}", self.name(), n),
            FamilySpec::CompleteBipartite { r, s } => write!(f, "{}:{}:{}", self.name(), r, s),
            FamilySpec::Broom { n, k }
            | FamilySpec::Lollipop { n, k }
            | FamilySpec::Tadpole { n, k } => write!(f, "{}:{}:{}", self.name(), n, k),
            FamilySpec::MatchingPlusIsolated { pairs, isolated } => {
                write!(f, "{}:{}:{}", self.name(), pairs, isolated)
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses the `name:param[:param]` mini-grammar, e.g. `path:4`,
    /// `broom:7:3`, `matching:3:2`.
    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let parse_err = |reason: &str| FamilyError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = text.split(':');
        let name = parts.next().ok_or_else(|| parse_err("empty spec"))?;
        let params: Vec<usize> = parts
            .map(|p| p.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|e| parse_err(&format!("bad integer parameter: {e}")))?;
        let arity = |want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(parse_err(&format!(
                    "{name} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "path" => {
                arity(1)?;
                FamilySpec::Path { n: params[0] }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: params[0] }
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete { n: params[0] }
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star { n: params[0] }
            }
            "complete-bipartite" | "biclique" => {
                arity(2)?;
                FamilySpec::CompleteBipartite { r: params[0], s: params[1] }
            }
            "wheel" => {
                arity(1)?;
                FamilySpec::Wheel { n: params[0] }
            }
            "broom" => {
                arity(2)?;
                FamilySpec::Broom { n: params[0], k: params[1] }
            }
            "lollipop" => {
                arity(2)?;
                FamilySpec::Lollipop { n: params[0], k: params[1] }
            }
            "tadpole" => {
                arity(2)?;
                FamilySpec::Tadpole { n: params[0], k: params[1] }
            }
            "unicyclic-star" => {
                arity(1)?;
                FamilySpec::UnicyclicStar { n: params[0] }
            }
            "matching" => {
                arity(2)?;
                FamilySpec::MatchingPlusIsolated { pairs: params[0], isolated: params[1] }
            }
            "edgeless" => {
                arity(1)?;
                FamilySpec::Edgeless { n: params[0] }
            }
            other => return Err(parse_err(&format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}
