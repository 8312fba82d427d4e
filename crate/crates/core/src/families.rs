//! Named graph families with a compact text form such as `g12:2,1,1,2`.
//!
//! G12 and G13 use a fixed labeling: u₁..u₄ are 0..3, w₁..w₃ are 4..6 and
//! the pendants follow from 7, grouped by owner u₁, u₂, u₃, u₄.
//! G12 is the spine u₁w₁u₂w₂u₃w₃u₄. G13 has u₂ adjacent to all three wᵢ,
//! with u₁, u₃, u₄ hanging off w₁, w₂, w₃.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, GraphError, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// K_{1,n−1}, given by its order n.
    Star(usize),
    Tabc(usize, usize, usize),
    /// Cliques K_s and K_t joined by one edge, the complement of K_{s,t} − e.
    Fst(usize, usize),
    /// K_i^c ∨ K_{n−i}, given as (i, n).
    IndJoin(usize, usize),
    G12([usize; 4]),
    G13([usize; 4]),
}

/// Spine edges of G12 and G13 on the labeled vertices 0..7.
const G12_CORE: [(usize, usize); 6] = [(0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3)];
const G13_CORE: [(usize, usize); 6] = [(1, 4), (1, 5), (1, 6), (0, 4), (2, 5), (3, 6)];

impl FamilySpec {
    /// G12 from possibly negative parameters, as they appear in parametrized
    /// statements at small k.
    pub fn g12(m: [i64; 4]) -> Result<Self> {
        Ok(Self::G12(nonnegative("g12", m)?))
    }

    pub fn g13(m: [i64; 4]) -> Result<Self> {
        Ok(Self::G13(nonnegative("g13", m)?))
    }

    pub fn order(&self) -> usize {
        match *self {
            Self::Path(n) | Self::Cycle(n) | Self::Complete(n) | Self::Star(n) => n,
            Self::Tabc(a, b, c) => a + b + c + 1,
            Self::Fst(s, t) => s + t,
            Self::IndJoin(_, n) => n,
            Self::G12(m) | Self::G13(m) => m.iter().sum::<usize>() + 7,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::Family(format!("{self}: {why}")));
        match *self {
            Self::Path(n) | Self::Complete(n) | Self::Star(n) if n == 0 => bad("order must be ≥ 1"),
            Self::Cycle(n) if n < 3 => bad("cycles need at least 3 vertices"),
            Self::Tabc(a, b, c) if a == 0 || b == 0 || c == 0 => bad("arm lengths must be ≥ 1"),
            Self::Fst(s, t) if s == 0 || t == 0 => bad("clique sizes must be ≥ 1"),
            Self::IndJoin(i, n) if i == 0 || i >= n => bad("need 1 ≤ i ≤ n−1"),
            _ if self.order() > MAX_VERTICES => {
                Err(GraphError::CapExceeded { n: self.order(), cap: MAX_VERTICES }.into())
            }
            _ => Ok(()),
        }
    }

    pub fn make(&self) -> Result<Graph> {
        self.validate()?;
        let g = match *self {
            Self::Path(n) => Graph::path(n)?,
            Self::Cycle(n) => Graph::cycle(n)?,
            Self::Complete(n) => Graph::complete(n)?,
            Self::Star(n) => Graph::star(n - 1)?,
            Self::Tabc(a, b, c) => {
                let mut edges = Vec::with_capacity(a + b + c);
                let mut next = 1;
                for len in [a, b, c] {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::build(next, &edges)?
            }
            Self::Fst(s, t) => {
                let mut edges = Vec::new();
                for (lo, hi) in [(0, s), (s, s + t)] {
                    for u in lo..hi {
                        for v in u + 1..hi {
                            edges.push((u, v));
                        }
                    }
                }
                edges.push((0, s));
                Graph::build(s + t, &edges)?
            }
            Self::IndJoin(i, n) => Graph::join(&Graph::empty(i)?, &Graph::complete(n - i)?)?,
            Self::G12(m) => pendant_tree(&G12_CORE, m)?,
            Self::G13(m) => pendant_tree(&G13_CORE, m)?,
        };
        Ok(g)
    }

    pub fn canonical(&self) -> Result<CanonicalForm> {
        Ok(canonical_form(&self.make()?)?)
    }

    /// Parameters (m₁..m₄) for G12 and G13.
    pub fn pendant_counts(&self) -> Option<[usize; 4]> {
        match *self {
            Self::G12(m) | Self::G13(m) => Some(m),
            _ => None,
        }
    }
}

fn nonnegative(kind: &str, m: [i64; 4]) -> Result<[usize; 4]> {
    if m.iter().any(|&x| x < 0) {
        return Err(Error::Family(format!("{kind}:{},{},{},{}", m[0], m[1], m[2], m[3])));
    }
    Ok(m.map(|x| x as usize))
}

fn pendant_tree(core: &[(usize, usize)], m: [usize; 4]) -> Result<Graph> {
    let n = 7 + m.iter().sum::<usize>();
    let mut edges = core.to_vec();
    let mut next = 7;
    for (owner, &count) in m.iter().enumerate() {
        for _ in 0..count {
            edges.push((owner, next));
            next += 1;
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// (d(u₁), d(u₂), d(u₃), d(u₄)) for G12 and G13.
pub fn family_degree_vector(spec: &FamilySpec) -> Result<[usize; 4]> {
    match *spec {
        FamilySpec::G12(m) => Ok([m[0] + 1, m[1] + 2, m[2] + 2, m[3] + 1]),
        FamilySpec::G13(m) => Ok([m[0] + 1, m[1] + 3, m[2] + 1, m[3] + 1]),
        _ => Err(Error::Family(format!("{spec}: degree vector is defined for g12 and g13 only"))),
    }
}

/// Every named family member of order `n` with a canonical form, for
/// labelling search winners. Members whose canonical form is unavailable
/// (non-trees above the general cap) are left out.
pub fn catalog(n: usize) -> Vec<(FamilySpec, CanonicalForm)> {
    let mut specs = vec![FamilySpec::Path(n), FamilySpec::Cycle(n), FamilySpec::Complete(n), FamilySpec::Star(n)];
    for a in 1..n {
        for b in a..n {
            if a + b + 1 < n {
                let c = n - 1 - a - b;
                if c >= b {
                    specs.push(FamilySpec::Tabc(a, b, c));
                }
            }
        }
    }
    for s in 1..=n / 2 {
        specs.push(FamilySpec::Fst(s, n - s));
    }
    for i in 1..n {
        specs.push(FamilySpec::IndJoin(i, n));
    }
    if n >= 7 {
        let r = n - 7;
        for a in 0..=r {
            for b in 0..=r - a {
                for c in 0..=r - a - b {
                    let m = [a, b, c, r - a - b - c];
                    specs.push(FamilySpec::G12(m));
                    specs.push(FamilySpec::G13(m));
                }
            }
        }
    }
    specs.into_iter().filter_map(|s| s.canonical().ok().map(|c| (s, c))).collect()
}

/// Names of the catalog entries isomorphic to `form`.
pub fn match_family(catalog: &[(FamilySpec, CanonicalForm)], form: &CanonicalForm) -> Vec<FamilySpec> {
    catalog.iter().filter(|(_, c)| c == form).map(|(s, _)| *s).collect()
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Path(n) => write!(f, "path:{n}"),
            Self::Cycle(n) => write!(f, "cycle:{n}"),
            Self::Complete(n) => write!(f, "complete:{n}"),
            Self::Star(n) => write!(f, "star:{n}"),
            Self::Tabc(a, b, c) => write!(f, "tabc:{a},{b},{c}"),
            Self::Fst(s, t) => write!(f, "fst:{s},{t}"),
            Self::IndJoin(i, n) => write!(f, "indjoin:{i},{n}"),
            Self::G12(m) => write!(f, "g12:{},{},{},{}", m[0], m[1], m[2], m[3]),
            Self::G13(m) => write!(f, "g13:{},{},{},{}", m[0], m[1], m[2], m[3]),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Family(format!("{s:?}: {why}"));
        let (kind, params) = s.trim().split_once(':').ok_or_else(|| bad("expected kind:params"))?;
        let nums: Vec<i64> = params
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("parameters must be integers"))?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(bad(&format!("{kind} takes {k} parameter(s)")))
            }
        };
        let four = || -> Result<[i64; 4]> {
            arity(4)?;
            Ok([nums[0], nums[1], nums[2], nums[3]])
        };
        if kind == "g12" {
            return Self::g12(four()?);
        }
        if kind == "g13" {
            return Self::g13(four()?);
        }
        if nums.iter().any(|&x| x < 0) {
            return Err(bad("parameters must be nonnegative"));
        }
        let u: Vec<usize> = nums.iter().map(|&x| x as usize).collect();
        let spec = match kind {
            "path" => arity(1).map(|_| Self::Path(u[0])),
            "cycle" => arity(1).map(|_| Self::Cycle(u[0])),
            "complete" => arity(1).map(|_| Self::Complete(u[0])),
            "star" => arity(1).map(|_| Self::Star(u[0])),
            "tabc" => arity(3).map(|_| Self::Tabc(u[0], u[1], u[2])),
            "fst" => arity(2).map(|_| Self::Fst(u[0], u[1])),
            "indjoin" => arity(2).map(|_| Self::IndJoin(u[0], u[1])),
            _ => Err(bad("unknown family")),
        }?;
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::independence_number;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        for s in ["g12:2,1,1,2", "fst:3,3", "indjoin:4,8", "tabc:1,2,4", "star:9", "cycle:8"] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert!("g12:1,-1,0,0".parse::<FamilySpec>().is_err());
        assert!("fst:3".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("indjoin:8,8".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn g12_shape() {
        let g = spec("g12:1,1,1,1").make().unwrap();
        assert_eq!(g.order(), 11);
        assert!(g.is_tree());
        assert_eq!([g.degree(0), g.degree(1), g.degree(2), g.degree(3)], [2, 3, 3, 2]);
        assert_eq!(independence_number(&g).size, 7);
    }

    #[test]
    fn g13_shape() {
        let s = spec("g13:2,0,2,2");
        let g = s.make().unwrap();
        assert_eq!(g.order(), 13);
        assert!(g.is_tree());
        let d = [g.degree(0), g.degree(1), g.degree(2), g.degree(3)];
        assert_eq!(d, [3, 3, 3, 3]);
        assert_eq!(family_degree_vector(&s).unwrap(), d);
    }

    #[test]
    fn degree_vectors() {
        assert_eq!(family_degree_vector(&spec("g12:2,1,1,2")).unwrap(), [3, 3, 3, 3]);
        assert_eq!(family_degree_vector(&spec("g13:2,0,2,2")).unwrap(), [3, 3, 3, 3]);
        assert_eq!(family_degree_vector(&spec("g12:0,0,0,0")).unwrap(), [1, 2, 2, 1]);
        assert!(family_degree_vector(&spec("path:4")).is_err());
    }

    #[test]
    fn small_families() {
        let f33 = spec("fst:3,3").make().unwrap();
        assert_eq!(f33.degree_sequence(), vec![2, 2, 2, 2, 3, 3]);
        let j = spec("indjoin:4,8").make().unwrap();
        assert_eq!(j.degree_sequence(), vec![4, 4, 4, 4, 7, 7, 7, 7]);
        let t = spec("tabc:1,2,3").make().unwrap();
        assert_eq!(t.degree_sequence(), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(spec("star:4").make().unwrap(), Graph::star(3).unwrap());
    }
}
