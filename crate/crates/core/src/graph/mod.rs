//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex. Graphs are
//! immutable: every transform returns a new value.

mod canon;
mod independence;

pub(crate) use canon::{canonical_order_rows, refine_cells};
pub use canon::{are_similar, canonical_form, canonical_form_with, CanonMethod, CanonicalForm};
pub use independence::{has_vertex_cover, independence_number, IndependenceCertificate};

use crate::error::GraphError;

/// Vertex cap; one adjacency row fits a machine word.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting loops, repeated
    /// pairs and out-of-range endpoints.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adj[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Self { n, adj: vec![0; n], m: 0 })
    }

    /// Builds a graph from adjacency masks, validating symmetry and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        check_order(n)?;
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(GraphError::Loop(v));
            }
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
            for w in bits(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(GraphError::MissingEdge(w, v));
                }
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Self { n: adj.len(), adj, m }
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::build(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CapExceeded { n, cap: 3 });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::build(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let mask = full_mask(n);
        Ok(Self::from_rows_unchecked((0..n).map(|v| mask & !bit(v)).collect()))
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::build(leaves + 1, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        bits(self.adj[v])
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Vertices reachable from `start`, as a mask.
    pub fn component_of(&self, start: Vertex) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connectivity by traversal from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n && self.is_connected()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// `u` and `v` are adjacent in the complement iff they are not adjacent here.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        Self::from_rows_unchecked((0..self.n).map(|v| mask & !self.adj[v] & !bit(v)).collect())
    }

    /// Disjoint union plus every cross edge; `g1` occupies the low indices.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
        let (n1, n2) = (g1.n, g2.n);
        check_order(n1 + n2)?;
        let low = full_mask(n1);
        let high = full_mask(n1 + n2) & !low;
        let mut adj = Vec::with_capacity(n1 + n2);
        adj.extend(g1.adj.iter().map(|r| r | high));
        adj.extend(g2.adj.iter().map(|r| (r << n1) | low));
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Disjoint union with `g1` on the low indices.
    pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
        check_order(g1.n + g2.n)?;
        let mut adj = g1.adj.clone();
        adj.extend(g2.adj.iter().map(|r| r << g1.n));
        Ok(Self::from_rows_unchecked(adj))
    }

    pub fn add_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Self { n: self.n, adj, m: self.m + 1 })
    }

    pub fn remove_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Self { n: self.n, adj, m: self.m - 1 })
    }

    /// Deletes `v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(GraphError::Empty);
        }
        let low = full_mask(v);
        let adj = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| {
                let r = self.adj[w];
                (r & low) | ((r >> 1) & !low)
            })
            .collect();
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Induced subgraph on `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: u64) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = bits(keep & self.vertex_mask()).collect();
        check_order(verts.len())?;
        let adj = verts
            .iter()
            .map(|&v| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(v, w))
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        let mut inverse = vec![usize::MAX; self.n];
        for (i, &p) in perm.iter().enumerate() {
            self.check_vertex(p)?;
            if inverse[p] != usize::MAX {
                return Err(GraphError::BadPermutation(self.n));
            }
            inverse[p] = i;
        }
        let adj = perm
            .iter()
            .map(|&old| bits(self.adj[old]).fold(0u64, |acc, w| acc | bit(inverse[w])))
            .collect();
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Replaces edge `uv` by a path `u w v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        check_order(self.n + 1)?;
        let w = self.n;
        let mut adj = self.adj.clone();
        adj[u] = (adj[u] & !bit(v)) | bit(w);
        adj[v] = (adj[v] & !bit(u)) | bit(w);
        adj.push(bit(u) | bit(v));
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Moves the edges `uw`, `w ∈ Y`, over to `v`.
    pub fn rewire(&self, u: Vertex, v: Vertex, ys: &[Vertex]) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if ys.is_empty() {
            return Err(GraphError::EmptyRewireSet);
        }
        let allowed = self.adj[u] & !self.adj[v] & !bit(v);
        let mut adj = self.adj.clone();
        let mut seen = 0u64;
        for &w in ys {
            if w >= self.n || allowed & bit(w) == 0 || seen & bit(w) != 0 {
                return Err(GraphError::BadRewireVertex(w));
            }
            seen |= bit(w);
            adj[u] &= !bit(w);
            adj[w] = (adj[w] & !bit(u)) | bit(v);
            adj[v] |= bit(w);
        }
        Ok(Self { n: self.n, adj, m: self.m })
    }

    /// Attaches `s` new pendant vertices to `v`.
    pub fn attach_pendants(&self, v: Vertex, s: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        check_order(self.n + s)?;
        let mut adj = self.adj.clone();
        for i in 0..s {
            let p = self.n + i;
            adj[v] |= bit(p);
            adj.push(bit(v));
        }
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Maximal internal paths `v0 v1 … vs`: both ends of degree ≥ 3, interior
    /// of degree 2. Each path is reported once, oriented from its smaller end.
    pub fn internal_paths(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        for start in 0..self.n {
            if self.degree(start) < 3 {
                continue;
            }
            for first in self.neighbor_iter(start) {
                let mut path = vec![start, first];
                let (mut prev, mut cur) = (start, first);
                while self.degree(cur) == 2 {
                    let next = (self.adj[cur] & !bit(prev)).trailing_zeros() as usize;
                    prev = cur;
                    cur = next;
                    path.push(cur);
                }
                if self.degree(cur) < 3 || cur == start {
                    continue;
                }
                if start < cur {
                    out.push(path);
                }
            }
        }
        out.sort();
        out
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::Empty),
        n if n > MAX_VERTICES => Err(GraphError::TooLarge(n)),
        _ => Ok(()),
    }
}
