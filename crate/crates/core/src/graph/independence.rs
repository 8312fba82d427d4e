use serde::{Deserialize, Serialize};

use super::{bit, bits, Graph};

/// A maximum independent set together with its size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceCertificate {
    pub size: usize,
    pub witness: u64,
}

impl IndependenceCertificate {
    pub fn witness_vertices(&self) -> Vec<usize> {
        bits(self.witness).collect()
    }

    /// Checks the witness is independent and of the stated size.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.witness & !g.vertex_mask() == 0
            && self.witness.count_ones() as usize == self.size
            && bits(self.witness).all(|v| g.neighbors(v) & self.witness == 0)
    }
}

/// Exact independence number by branch and bound.
///
/// Branches on a maximum-degree vertex of the residual graph (lowest index on
/// ties) and prunes with a greedy clique-cover bound. Vertices of residual
/// degree at most one are taken greedily, which never loses optimality.
pub fn independence_number(g: &Graph) -> IndependenceCertificate {
    let mut best = IndependenceCertificate { size: 0, witness: 0 };
    branch(g.rows(), g.vertex_mask(), 0, &mut best);
    best
}

fn branch(adj: &[u64], mut cand: u64, mut chosen: u64, best: &mut IndependenceCertificate) {
    // degree ≤ 1 reductions
    loop {
        let mut reduced = false;
        for v in bits(cand) {
            if cand & bit(v) == 0 {
                continue;
            }
            let nb = adj[v] & cand;
            if nb.count_ones() <= 1 {
                chosen |= bit(v);
                cand &= !(nb | bit(v));
                reduced = true;
            }
        }
        if !reduced {
            break;
        }
    }
    let size = chosen.count_ones() as usize;
    if cand == 0 {
        if size > best.size {
            *best = IndependenceCertificate { size, witness: chosen };
        }
        return;
    }
    if size + clique_cover_bound(adj, cand) <= best.size {
        return;
    }
    let pivot = bits(cand)
        .max_by(|&a, &b| {
            let (da, db) = ((adj[a] & cand).count_ones(), (adj[b] & cand).count_ones());
            da.cmp(&db).then(b.cmp(&a))
        })
        .expect("cand is nonempty");
    branch(adj, cand & !(adj[pivot] | bit(pivot)), chosen | bit(pivot), best);
    branch(adj, cand & !bit(pivot), chosen, best);
}

/// Number of cliques in a greedy clique cover of `cand`.
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut count = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut clique = bit(v);
        let mut extend = adj[v] & cand;
        while extend != 0 {
            let w = extend.trailing_zeros() as usize;
            clique |= bit(w);
            extend &= adj[w];
        }
        cand &= !clique;
        count += 1;
    }
    count
}

/// Whether some set of at most `k` vertices covers every edge.
///
/// Equivalent to `independence_number(g) ≥ n − k`.
pub fn has_vertex_cover(g: &Graph, k: usize) -> bool {
    cover(g.rows(), g.vertex_mask(), k)
}

fn cover(adj: &[u64], alive: u64, k: usize) -> bool {
    let Some(u) = bits(alive).find(|&u| adj[u] & alive != 0) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    let nb = adj[u] & alive;
    if nb.count_ones() as usize > k {
        return cover(adj, alive & !bit(u), k - 1);
    }
    let v = nb.trailing_zeros() as usize;
    cover(adj, alive & !bit(u), k - 1) || cover(adj, alive & !bit(v), k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_and_cycles() {
        let p5 = independence_number(&Graph::path(5).unwrap());
        assert_eq!(p5.size, 3);
        assert!(p5.is_valid_for(&Graph::path(5).unwrap()));
        let c7 = Graph::cycle(7).unwrap();
        let cert = independence_number(&c7);
        assert_eq!(cert.size, 3);
        assert!(cert.is_valid_for(&c7));
        assert_eq!(independence_number(&Graph::complete(6).unwrap()).size, 1);
        assert_eq!(independence_number(&Graph::empty(6).unwrap()).size, 6);
    }

    #[test]
    fn vertex_cover_matches_independence() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(has_vertex_cover(&c7, 4));
        assert!(!has_vertex_cover(&c7, 3));
        let k5 = Graph::complete(5).unwrap();
        assert!(has_vertex_cover(&k5, 4));
        assert!(!has_vertex_cover(&k5, 3));
    }
}
