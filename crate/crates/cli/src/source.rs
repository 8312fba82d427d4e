//! Graph sources accepted on the command line.

use std::path::Path;

use aalpha_core::enumeration::decode_graph6;
use aalpha_core::families::FamilySpec;
use aalpha_core::{Error, Graph};
use anyhow::{bail, Context, Result};

/// Reads an edge-list file: the first line holds the order, each further
/// line one edge `u v`. Blank lines and `#` comments are ignored.
pub fn read_edge_list(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("in {}", path.display()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| s.parse::<usize>().with_context(|| format!("line {}: expected an integer, got {s:?}", i + 1));
        match (order, fields.as_slice()) {
            (None, [n]) => order = Some(parse(n)?),
            (None, _) => bail!("line {}: expected the vertex count", i + 1),
            (Some(_), [u, v]) => edges.push((parse(u)?, parse(v)?)),
            (Some(_), _) => bail!("line {}: expected two vertices", i + 1),
        }
    }
    let Some(n) = order else { bail!("empty edge list") };
    Ok(Graph::build(n, &edges).map_err(Error::from)?)
}

pub struct Source {
    pub name: String,
    pub graph: Graph,
}

pub fn resolve(family: Option<&str>, graph6: Option<&str>, edges: Option<&Path>) -> Result<Source> {
    match (family, graph6, edges) {
        (Some(f), None, None) => {
            let spec: FamilySpec = f.parse()?;
            Ok(Source { name: spec.to_string(), graph: spec.make()? })
        }
        (None, Some(s), None) => Ok(Source { name: s.to_string(), graph: decode_graph6(s).map_err(Error::from)? }),
        (None, None, Some(p)) => Ok(Source { name: p.display().to_string(), graph: read_edge_list(p)? }),
        _ => bail!("give exactly one of --family, --graph6, --edges"),
    }
}
