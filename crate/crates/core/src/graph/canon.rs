//! Isomorphism-complete canonical codes.
//!
//! Trees get an AHU encoding rooted at the center. General graphs (n ≤ 12)
//! get the lexicographically largest permuted adjacency matrix reachable by
//! individualization–refinement, with orbit pruning from automorphisms found
//! along the way.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bit, bits, Graph, Vertex};
use crate::enumeration::graph6;
use crate::error::GraphError;

/// Order cap for the general refinement method.
pub const GENERAL_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CanonMethod {
    TreeAhu,
    RefinementBacktrack,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    method: CanonMethod,
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn method(&self) -> CanonMethod {
        self.method
    }

    pub fn code(&self) -> &[u8] {
        &self.code
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.method {
            CanonMethod::TreeAhu => write!(f, "tree:{}", String::from_utf8_lossy(&self.code)),
            CanonMethod::RefinementBacktrack => {
                let n = self.code[0] as usize;
                let colored = self.code[1] != 0;
                let rows = unpack_rows(n, &self.code[2 + if colored { n } else { 0 }..]);
                let g = Graph::from_rows_unchecked(rows);
                write!(f, "g6:{}", graph6::encode(&g).unwrap_or_default())?;
                if colored {
                    let colors: Vec<String> = self.code[2..2 + n].iter().map(|c| c.to_string()).collect();
                    write!(f, "/{}", colors.join(""))?;
                }
                Ok(())
            }
        }
    }
}

/// Canonical form, choosing AHU for trees and refinement otherwise.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    if g.is_tree() {
        canonical_form_with(g, CanonMethod::TreeAhu)
    } else {
        canonical_form_with(g, CanonMethod::RefinementBacktrack)
    }
}

pub fn canonical_form_with(g: &Graph, method: CanonMethod) -> Result<CanonicalForm, GraphError> {
    match method {
        CanonMethod::TreeAhu => {
            if !g.is_tree() {
                return Err(GraphError::NotATree);
            }
            Ok(CanonicalForm { method, code: ahu_code(g) })
        }
        CanonMethod::RefinementBacktrack => {
            if g.order() > GENERAL_CAP {
                return Err(GraphError::CapExceeded { n: g.order(), cap: GENERAL_CAP });
            }
            let colors = vec![0u8; g.order()];
            Ok(general_code(g, &colors))
        }
    }
}

/// True iff some automorphism of `g` maps `u` to `v`.
pub fn are_similar(g: &Graph, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, n });
        }
    }
    if n > GENERAL_CAP {
        return Err(GraphError::CapExceeded { n, cap: GENERAL_CAP });
    }
    if u == v {
        return Ok(true);
    }
    if g.degree(u) != g.degree(v) {
        return Ok(false);
    }
    let mark = |w: Vertex| {
        let mut c = vec![0u8; n];
        c[w] = 1;
        c
    };
    Ok(general_code(g, &mark(u)) == general_code(g, &mark(v)))
}

/// Adjacency rows of the canonical relabeling of `rows`.
pub(crate) fn canonical_order_rows(rows: &[u64]) -> Vec<u64> {
    let colors = vec![0u8; rows.len()];
    Search::run(rows, &colors).0
}

fn general_code(g: &Graph, colors: &[u8]) -> CanonicalForm {
    let n = g.order();
    let (rows, order) = Search::run(g.rows(), colors);
    let colored = colors.iter().any(|&c| c != 0);
    let mut code = Vec::with_capacity(2 + n + n * n / 16 + 1);
    code.push(n as u8);
    code.push(colored as u8);
    if colored {
        code.extend(order.iter().map(|&v| colors[v]));
    }
    pack_rows(&rows, &mut code);
    CanonicalForm { method: CanonMethod::RefinementBacktrack, code }
}

/// Upper triangle, column-major, eight bits per byte.
fn pack_rows(rows: &[u64], out: &mut Vec<u8>) {
    let n = rows.len();
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | ((rows[i] >> j) & 1) as u8;
            k += 1;
            if k == 8 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (8 - k));
    }
}

fn unpack_rows(n: usize, packed: &[u8]) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if packed[idx / 8] >> (7 - idx % 8) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            idx += 1;
        }
    }
    rows
}

/// Splits cells by neighbor counts until the partition is equitable.
/// Fragments are ordered by count, so the result is isomorphism-invariant.
pub(crate) fn refine_cells(adj: &[u64], cells: &mut Vec<u64>) {
    let mut s = 0;
    let mut buckets: Vec<(u32, u64)> = Vec::with_capacity(8);
    while s < cells.len() {
        let splitter = cells[s];
        let mut out = Vec::with_capacity(cells.len() + 2);
        let mut split = false;
        for &c in cells.iter() {
            if c.count_ones() == 1 {
                out.push(c);
                continue;
            }
            buckets.clear();
            for v in bits(c) {
                let k = (adj[v] & splitter).count_ones();
                match buckets.iter_mut().find(|b| b.0 == k) {
                    Some(b) => b.1 |= bit(v),
                    None => buckets.push((k, bit(v))),
                }
            }
            if buckets.len() > 1 {
                split = true;
                buckets.sort_unstable_by_key(|b| b.0);
            }
            out.extend(buckets.iter().map(|b| b.1));
        }
        *cells = out;
        s = if split { 0 } else { s + 1 };
    }
}

struct Leaf {
    rows: Vec<u64>,
    order: Vec<Vertex>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<Vertex>>,
}

const MAX_STORED_AUTOS: usize = 256;

impl<'a> Search<'a> {
    fn run(adj: &'a [u64], colors: &[u8]) -> (Vec<u64>, Vec<Vertex>) {
        let n = adj.len();
        let mut palette: Vec<u8> = colors.to_vec();
        palette.sort_unstable();
        palette.dedup();
        let mut cells: Vec<u64> = palette
            .iter()
            .map(|&c| (0..n).filter(|&v| colors[v] == c).fold(0u64, |m, v| m | bit(v)))
            .collect();

        let mut search = Search { adj, n, first: None, best: None, autos: Vec::new() };
        search.seed_twin_swaps(colors);
        refine_cells(adj, &mut cells);
        let mut prefix = Vec::with_capacity(n);
        search.descend(cells, &mut prefix);
        let best = search.best.expect("search visits at least one leaf");
        (best.rows, best.order)
    }

    /// Transpositions of same-colored twins are automorphisms.
    fn seed_twin_swaps(&mut self, colors: &[u8]) {
        let mut covered = 0u64;
        for u in 0..self.n {
            if covered & bit(u) != 0 {
                continue;
            }
            for v in u + 1..self.n {
                if colors[u] == colors[v]
                    && self.adj[u] & !bit(v) == self.adj[v] & !bit(u)
                    && self.autos.len() < MAX_STORED_AUTOS
                {
                    let mut p: Vec<Vertex> = (0..self.n).collect();
                    p.swap(u, v);
                    self.autos.push(p);
                    covered |= bit(v);
                }
            }
        }
    }

    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<Vertex>) {
        let target = cells.iter().position(|c| c.count_ones() > 1);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[t];
        let mut explored = 0u64;
        for v in bits(cell) {
            let orbit = self.orbit_under_stabilizer(prefix, v);
            if orbit & explored != 0 {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            refine_cells(self.adj, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored |= bit(v);
        }
    }

    /// Orbit of `v` under the group generated by stored automorphisms that
    /// fix every vertex of `prefix`.
    fn orbit_under_stabilizer(&self, prefix: &[Vertex], v: Vertex) -> u64 {
        let gens: Vec<&Vec<Vertex>> =
            self.autos.iter().filter(|g| prefix.iter().all(|&p| g[p] == p)).collect();
        let mut orbit = bit(v);
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for w in bits(frontier) {
                for g in &gens {
                    next |= bit(g[w]);
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        orbit
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<Vertex> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> =
            order.iter().map(|&v| bits(self.adj[v]).fold(0u64, |m, w| m | bit(pos[w]))).collect();

        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.rows == rows {
                let mut gamma = vec![0; self.n];
                for i in 0..self.n {
                    gamma[reference.order[i]] = order[i];
                }
                if self.autos.len() < MAX_STORED_AUTOS {
                    self.autos.push(gamma);
                }
                return;
            }
        }
        let leaf = Leaf { rows, order };
        if self.first.is_none() {
            self.first = Some(Leaf { rows: leaf.rows.clone(), order: leaf.order.clone() });
        }
        match &self.best {
            Some(b) if b.rows >= leaf.rows => {}
            _ => self.best = Some(leaf),
        }
    }
}

fn tree_centers(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut remaining = n;
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = 0u64;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed |= bit(v);
        }
        for &v in &layer {
            for w in bits(g.neighbors(v) & !removed) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    let mut centers: Vec<Vertex> = (0..n).filter(|&v| removed & bit(v) == 0).collect();
    centers.sort_unstable();
    centers
}

fn ahu_rooted(g: &Graph, root: Vertex, parent: Option<Vertex>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbor_iter(root)
        .filter(|&w| Some(w) != parent)
        .map(|w| ahu_rooted(g, w, Some(root)))
        .collect();
    children.sort_unstable();
    let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    code.push(b'(');
    for c in children {
        code.extend(c);
    }
    code.push(b')');
    code
}

fn ahu_code(g: &Graph) -> Vec<u8> {
    tree_centers(g)
        .into_iter()
        .map(|c| ahu_rooted(g, c, None))
        .min()
        .expect("a tree has a center")
}
