//! Connected graphs up to isomorphism, generated natively for n ≤ 9.
//!
//! Every connected graph has a vertex whose removal leaves it connected, so
//! the classes of order `n` are exactly the canonical forms of "connected
//! parent of order n−1 plus one vertex joined to a nonempty subset". Children
//! are canonically relabelled and deduplicated; output is sorted by canonical
//! adjacency, so it does not depend on worker scheduling.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::GraphError;
use crate::graph::{bit, canonical_order_rows, Graph};

pub const MAX_NATIVE_ORDER: usize = 9;

/// All connected graphs of order `n`, one canonical representative per class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if n > MAX_NATIVE_ORDER {
        return Err(GraphError::CapExceeded { n, cap: MAX_NATIVE_ORDER });
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for order in 2..=n {
        level = extend_level(&level, order);
    }
    Ok(level.into_iter().map(Graph::from_rows_unchecked).collect())
}

fn extend_level(parents: &[Vec<u64>], order: usize) -> Vec<Vec<u64>> {
    let new = order - 1;
    let subsets = 1u64 << new;
    let found: HashSet<Vec<u64>> = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, parent| {
            let mut rows = parent.clone();
            rows.push(0);
            for s in 1..subsets {
                for (v, row) in rows.iter_mut().enumerate().take(new) {
                    *row = parent[v] | if s & bit(v) != 0 { bit(new) } else { 0 };
                }
                rows[new] = s;
                acc.insert(canonical_order_rows(&rows));
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut out: Vec<Vec<u64>> = found.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(connected_graphs(10).is_err());
    }

    #[test]
    fn members_are_connected() {
        for g in connected_graphs(5).unwrap() {
            assert!(g.is_connected());
        }
    }
}
