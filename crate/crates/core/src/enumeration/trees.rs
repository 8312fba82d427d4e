//! Free trees by level-sequence successor (Wright–Richmond–Odlyzko–McKay
//! with the Beyer–Hedetniemi rooted-tree step).
//!
//! Each tree is a level sequence of a rooted tree, rooted at a center, in
//! canonical form: the leftmost root subtree is no taller than the rest, and
//! no larger or lexicographically later when the heights tie.

use crate::error::GraphError;
use crate::graph::{bit, Graph};

pub const MAX_TREE_ORDER: usize = 20;

/// Pull-based stream of one representative per free-tree class.
pub struct TreeStream {
    n: usize,
    layout: Option<Vec<usize>>,
    started: bool,
}

impl TreeStream {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_TREE_ORDER {
            return Err(GraphError::CapExceeded { n, cap: MAX_TREE_ORDER });
        }
        // path rooted at its center
        let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
        Ok(Self { n, layout: Some(layout), started: false })
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n == 1 {
            if self.started {
                return None;
            }
            self.started = true;
            return Some(Graph::empty(1).expect("order 1"));
        }
        if self.started {
            let current = self.layout.take()?;
            self.layout = next_rooted_tree(&current, None);
        }
        self.started = true;
        let candidate = self.layout.take()?;
        let valid = next_free_tree(candidate);
        let g = layout_to_graph(&valid);
        self.layout = Some(valid);
        Some(g)
    }
}

pub fn trees(n: usize) -> Result<TreeStream, GraphError> {
    TreeStream::new(n)
}

/// One Beyer–Hedetniemi step; `p` defaults to the last slot above level 1.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = p.unwrap_or_else(|| {
        let mut p = pred.len() - 1;
        while pred[p] == 1 {
            p -= 1;
        }
        p
    });
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Returns `candidate` if it is a canonical free-tree layout, otherwise jumps
/// to the next candidate that is.
fn next_free_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_tree(&candidate);
    let left_height = *left.iter().max().expect("left subtree is nonempty");
    let rest_height = *rest.iter().max().expect("rest is nonempty");
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        if left.len() > rest.len() || (left.len() == rest.len() && left > rest) {
            valid = false;
        }
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p)).expect("p > 0");
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = *new_left.iter().max().expect("nonempty");
        let len = next.len();
        for (i, level) in (1..=h + 1).enumerate() {
            next[len - (h + 1) + i] = level;
        }
    }
    next
}

/// Splits a layout into its leftmost root subtree (levels shifted down by
/// one) and the remaining tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let n = layout.len();
    let mut rows = vec![0u64; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_rows_unchecked(rows)
}
