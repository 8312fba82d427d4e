//! Exhaustive extremal search over classes of connected graphs with a fixed
//! independence number, plus α-sweeps, crossover search, threshold roots
//! and the verification drivers built on them.

mod report;
mod roots;
pub mod suites;
mod sweep;
mod verify;

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{connected_graphs, read_graph6_file, trees, MAX_NATIVE_ORDER, MAX_TREE_ORDER};
use crate::error::{Error, Result};
use crate::families::{match_family, FamilySpec};
use crate::graph::{canonical_form, has_vertex_cover, independence_number, CanonicalForm, Graph};
use crate::spectra::{spectral_radius, AlphaValue};

pub use report::{AlphaEntry, Status, VerificationReport, WinnerEntry};
pub use roots::{s1, threshold_roots, ThresholdRoot, ROOT_RESIDUAL};
pub use sweep::{alpha_sweep, crossover, sweep_csv, SweepRow, CROSSOVER_WIDTH};
pub use verify::{listed_minimizers, verify_theorem, ListedSet, TheoremId, VerifyParams};

/// Winners within this distance of the optimum are reported as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;
/// Required gap for a strict inequality to count.
pub const STRICT_MARGIN: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    TreesOnly,
    ConnectedGraphs,
    /// Connected graphs of the requested order read from a graph6 file,
    /// optionally truncated to the first `limit` of them.
    Corpus { path: PathBuf, limit: Option<usize> },
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::TreesOnly => f.write_str("trees"),
            Scope::ConnectedGraphs => f.write_str("connected"),
            Scope::Corpus { path, limit: None } => write!(f, "corpus:{}", path.display()),
            Scope::Corpus { path, limit: Some(l) } => write!(f, "corpus:{}[..{l}]", path.display()),
        }
    }
}

/// The graphs of order `n` with independence number `i` within a scope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ClassKey {
    pub n: usize,
    pub i: usize,
    pub scope: Scope,
}

impl ClassKey {
    pub fn new(n: usize, i: usize, scope: Scope) -> Result<Self> {
        if n == 0 || i == 0 || i > n {
            return Err(Error::Invalid(format!("need 1 ≤ i ≤ n, got n = {n}, i = {i}")));
        }
        match scope {
            Scope::TreesOnly if n > MAX_TREE_ORDER => {
                Err(Error::Cap(format!("tree enumeration is capped at n = {MAX_TREE_ORDER}")))
            }
            Scope::ConnectedGraphs if n > MAX_NATIVE_ORDER => Err(Error::Cap(format!(
                "native connected enumeration is capped at n = {MAX_NATIVE_ORDER}; supply a graph6 corpus"
            ))),
            _ => Ok(Self { n, i, scope }),
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, i={}, {}", self.n, self.i, self.scope)
    }
}

fn has_independence(g: &Graph, i: usize) -> bool {
    let n = g.order();
    // an independent set of size i exists iff the rest covers every edge
    has_vertex_cover(g, n - i) && independence_number(g).size == i
}

/// Members of the class in generation order.
pub fn class_members(key: &ClassKey) -> Result<Vec<Graph>> {
    let keep = |g: &Graph| has_independence(g, key.i);
    let out = match &key.scope {
        Scope::TreesOnly => {
            let all: Vec<Graph> = trees(key.n)?.collect();
            all.into_par_iter().filter(keep).collect()
        }
        Scope::ConnectedGraphs => connected_graphs(key.n)?.into_par_iter().filter(keep).collect(),
        Scope::Corpus { path, limit } => {
            let mut all = Vec::new();
            for g in read_graph6_file(path)? {
                let g = g?;
                if g.order() == key.n && g.is_connected() {
                    all.push(g);
                    if limit.is_some_and(|l| all.len() >= l) {
                        break;
                    }
                }
            }
            all.into_par_iter().filter(keep).collect()
        }
    };
    Ok(out)
}

/// Per-run memo of class members, so drivers sharing a class enumerate it once.
#[derive(Default)]
pub struct ClassCache {
    classes: Mutex<HashMap<ClassKey, Arc<Vec<Graph>>>>,
}

impl ClassCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn members(&self, key: &ClassKey) -> Result<Arc<Vec<Graph>>> {
        if let Some(c) = self.classes.lock().expect("cache lock").get(key) {
            return Ok(Arc::clone(c));
        }
        let members = Arc::new(class_members(key)?);
        self.classes.lock().expect("cache lock").insert(key.clone(), Arc::clone(&members));
        Ok(members)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

#[derive(Clone, Debug, Serialize)]
pub struct Winner {
    pub canonical: String,
    pub graph6: String,
    pub lambda: f64,
    pub family_match: Vec<FamilySpec>,
    #[serde(skip)]
    pub form: CanonicalForm,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub class: ClassKey,
    pub alpha: AlphaValue,
    pub direction: Direction,
    pub optimum: f64,
    /// Sorted by canonical form.
    pub winners: Vec<Winner>,
    /// Best λ outside the tie set.
    pub runner_up: Option<f64>,
    pub evaluated_count: usize,
    pub max_residual: f64,
    pub max_trace_error: f64,
}

impl Certificate {
    /// Distance from the optimum to the runner-up.
    pub fn margin(&self) -> Option<f64> {
        self.runner_up.map(|r| (r - self.optimum).abs())
    }

    pub fn is_unique(&self) -> bool {
        self.winners.len() == 1
    }
}

/// Evaluates λ_α on every member and collects the optimum and its ties.
/// The result does not depend on how the evaluation is scheduled.
pub fn extremize(
    key: &ClassKey,
    members: &[Graph],
    alpha: &AlphaValue,
    direction: Direction,
    catalog: &[(FamilySpec, CanonicalForm)],
) -> Result<Certificate> {
    if members.is_empty() {
        return Err(Error::EmptyClass(key.to_string()));
    }
    let solved: Vec<(f64, f64, f64)> = members
        .par_iter()
        .map(|g| spectral_radius(g, alpha).map(|r| (r.lambda, r.residual, r.trace_error)))
        .collect::<std::result::Result<_, _>>()?;

    let better = |a: f64, b: f64| match direction {
        Direction::Min => a < b,
        Direction::Max => a > b,
    };
    let optimum = solved.iter().map(|s| s.0).reduce(|a, b| if better(b, a) { b } else { a }).expect("nonempty");
    let mut winners = Vec::new();
    let mut runner_up: Option<f64> = None;
    for (g, &(lambda, _, _)) in members.iter().zip(&solved) {
        if (lambda - optimum).abs() <= TIE_TOLERANCE {
            let form = canonical_form(g)?;
            winners.push(Winner {
                canonical: form.to_string(),
                graph6: crate::enumeration::encode_graph6(g)?,
                lambda,
                family_match: match_family(catalog, &form),
                form,
                graph: g.clone(),
            });
        } else if runner_up.is_none_or(|r| better(lambda, r)) {
            runner_up = Some(lambda);
        }
    }
    winners.sort_by(|a, b| a.form.cmp(&b.form));
    Ok(Certificate {
        class: key.clone(),
        alpha: alpha.clone(),
        direction,
        optimum,
        winners,
        runner_up,
        evaluated_count: members.len(),
        max_residual: solved.iter().map(|s| s.1).fold(0.0, f64::max),
        max_trace_error: solved.iter().map(|s| s.2).fold(0.0, f64::max),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::catalog;

    #[test]
    fn complete_graph_class() {
        let key = ClassKey::new(5, 1, Scope::ConnectedGraphs).unwrap();
        let members = class_members(&key).unwrap();
        assert_eq!(members, vec![Graph::complete(5).unwrap()]);
    }

    #[test]
    fn caps_and_validation() {
        assert!(ClassKey::new(10, 6, Scope::ConnectedGraphs).is_err());
        assert!(ClassKey::new(21, 6, Scope::TreesOnly).is_err());
        assert!(ClassKey::new(5, 0, Scope::TreesOnly).is_err());
        assert!(ClassKey::new(5, 6, Scope::TreesOnly).is_err());
    }

    #[test]
    fn cycle_minimizes_seven_three() {
        let key = ClassKey::new(7, 3, Scope::ConnectedGraphs).unwrap();
        let members = class_members(&key).unwrap();
        let cert = extremize(&key, &members, &"0".parse().unwrap(), Direction::Min, &catalog(7)).unwrap();
        assert!(cert.is_unique());
        assert_eq!(cert.winners[0].family_match, vec![FamilySpec::Cycle(7)]);
        assert_eq!(cert.evaluated_count, members.len());
        assert!(cert.margin().unwrap() > STRICT_MARGIN);
    }
}
