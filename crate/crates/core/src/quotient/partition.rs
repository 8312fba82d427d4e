use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, refine_cells, Graph};
use crate::spectra::{jacobi, AlphaValue};

/// Ordered vertex partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Cells must be nonempty, disjoint and cover 0..n.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::Partition(format!("cell {i} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::Partition(format!("vertex {v} out of range for order {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Partition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::Partition(format!("vertex {v} is not covered")));
        }
        Ok(Self { cells })
    }

    pub fn trivial(n: usize) -> Self {
        Self { cells: vec![(0..n).collect()] }
    }

    /// One cell per distinct degree, in increasing degree order.
    pub fn by_degree(g: &Graph) -> Self {
        let mut degrees: Vec<usize> = g.degrees();
        degrees.sort_unstable();
        degrees.dedup();
        let cells = degrees
            .iter()
            .map(|&d| (0..g.order()).filter(|&v| g.degree(v) == d).collect())
            .collect();
        Self { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    fn order(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    fn masks(&self) -> Vec<u64> {
        self.cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect()
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        if self.order() != g.order() {
            return Err(Error::Partition(format!(
                "partition covers {} vertices, graph has {}",
                self.order(),
                g.order()
            )));
        }
        Ok(())
    }
}

/// Every vertex of cell i has the same number of neighbors in cell j, for all
/// i, j. This does not depend on α.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    p.check_order(g)?;
    let masks = p.masks();
    Ok(p.cells.iter().all(|cell| {
        masks.iter().all(|&target| {
            let count = |v: usize| (g.neighbors(v) & target).count_ones();
            let first = count(cell[0]);
            cell.iter().all(|&v| count(v) == first)
        })
    }))
}

/// Coarsest equitable partition refining `seed`.
pub fn refine_to_equitable(g: &Graph, seed: &Partition) -> Result<Partition> {
    seed.check_order(g)?;
    let mut masks = seed.masks();
    refine_cells(g.rows(), &mut masks);
    Ok(Partition { cells: masks.into_iter().map(|m| bits(m).collect()).collect() })
}

/// Row-major t×t matrix of block row sums of A_α under an equitable partition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientMatrix {
    t: usize,
    sizes: Vec<usize>,
    entries: Vec<f64>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.t
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.t + j]
    }

    /// Largest eigenvalue, from the symmetrized diag(√nᵢ) B diag(√nᵢ)⁻¹.
    pub fn spectral_radius(&self) -> Result<f64> {
        let t = self.t;
        let mut s = vec![0.0; t * t];
        for i in 0..t {
            for j in 0..t {
                s[i * t + j] = (self.sizes[i] as f64 / self.sizes[j] as f64).sqrt() * self.get(i, j);
            }
        }
        // exact symmetry keeps Jacobi's rotations honest
        for i in 0..t {
            for j in i + 1..t {
                let m = 0.5 * (s[i * t + j] + s[j * t + i]);
                s[i * t + j] = m;
                s[j * t + i] = m;
            }
        }
        let d = jacobi::decompose(s, t, false)?;
        Ok(d.values.into_iter().fold(f64::NEG_INFINITY, f64::max))
    }
}

pub fn quotient_matrix(g: &Graph, p: &Partition, alpha: &AlphaValue) -> Result<QuotientMatrix> {
    if !is_equitable(g, p)? {
        return Err(Error::Partition("partition is not equitable".into()));
    }
    let a = alpha.value();
    let masks = p.masks();
    let t = p.len();
    let mut entries = vec![0.0; t * t];
    for (i, cell) in p.cells.iter().enumerate() {
        let v = cell[0];
        for (j, &target) in masks.iter().enumerate() {
            let mut b = (1.0 - a) * (g.neighbors(v) & target).count_ones() as f64;
            if i == j {
                b += a * g.degree(v) as f64;
            }
            entries[i * t + j] = b;
        }
    }
    Ok(QuotientMatrix { t, sizes: p.sizes(), entries })
}
