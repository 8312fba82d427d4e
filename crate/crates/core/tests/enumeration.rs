use std::collections::HashSet;

use aalpha_core::enumeration::{connected_graphs, decode_graph6, encode_graph6, trees, Graph6Reader};
use aalpha_core::graph::{canonical_form, canonical_form_with, CanonMethod};
use aalpha_core::Graph;
use proptest::prelude::*;

/// Smallest upper-triangle bit string over all vertex orders.
fn brute_canonical(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(perm[i], perm[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

fn decode_pruefer(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::build(n, &edges).unwrap()
}

/// Every labelled tree via Prüfer sequences, deduplicated by the general
/// refinement canonical form (not the tree encoding used by the generator).
fn labelled_tree_classes(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut seen = HashSet::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let g = decode_pruefer(&seq, n);
        seen.insert(canonical_form_with(&g, CanonMethod::RefinementBacktrack).unwrap());
        let Some(i) = (0..seq.len()).rev().find(|&i| seq[i] + 1 < n) else { break };
        seq[i] += 1;
        seq[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
    seen.len()
}

#[test]
fn tree_counts_match_labelled_enumeration() {
    for n in 1..=8 {
        assert_eq!(trees(n).unwrap().count(), labelled_tree_classes(n), "n = {n}");
    }
}

#[test]
fn generated_trees_are_distinct_trees() {
    for n in 1..=12 {
        let all: Vec<Graph> = trees(n).unwrap().collect();
        assert!(all.iter().all(|g| g.is_tree() && g.order() == n));
        let forms: HashSet<_> = all.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), all.len(), "n = {n}");
    }
}

#[test]
fn connected_counts_match_edge_subset_oracle() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut classes = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::build(n, &edges).unwrap();
            if g.is_connected() {
                classes.insert(brute_canonical(&g));
            }
        }
        let generated = connected_graphs(n).unwrap();
        assert_eq!(generated.len(), classes.len(), "n = {n}");
        let codes: HashSet<u64> = generated.iter().map(brute_canonical).collect();
        assert_eq!(codes, classes, "n = {n}");
    }
}

#[test]
fn connected_counts_up_to_eight() {
    let counts: Vec<usize> = (1..=8).map(|n| connected_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn connected_generation_is_capped() {
    assert!(connected_graphs(10).is_err());
}

#[test]
fn known_graph6_strings() {
    assert_eq!(encode_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
    assert_eq!(encode_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
    assert_eq!(encode_graph6(&Graph::path(3).unwrap()).unwrap(), "Bg");
    assert_eq!(decode_graph6("D??").unwrap(), Graph::empty(5).unwrap());
}

#[test]
fn malformed_graph6_is_rejected() {
    for bad in ["", "C}x", "C~~", "A\u{7f}"] {
        assert!(decode_graph6(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn reader_skips_header_and_reports_line() {
    let text = ">>graph6<<A_\nBw\n\nC~~\nC~\n";
    let got: Vec<_> = Graph6Reader::new(text.as_bytes()).collect();
    assert_eq!(got.len(), 4);
    assert!(got[0].is_ok() && got[1].is_ok() && got[3].is_ok());
    let err = got[2].as_ref().unwrap_err().to_string();
    assert!(err.contains('4'), "{err}");
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=20).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(), seed in any::<u64>()) {
        let n = g.order();
        prop_assume!(n <= 10);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }
}
