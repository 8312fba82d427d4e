//! The A_α matrix αD(G) + (1−α)A(G), its spectrum and its Perron vector.

mod bounds;
pub(crate) mod jacobi;
mod ratio;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SpectralError;
use crate::graph::Graph;

pub use bounds::{bound_lower_star, bound_lower_star_piecewise, bound_sandwich};
pub use jacobi::{MAX_SWEEPS, OFF_TOLERANCE};
pub use ratio::{eigen_ratio_terms, RatioTerms};

/// Residual above which the Perron vector is polished by inverse iteration.
const POLISH_THRESHOLD: f64 = 1e-13;

/// α in [0, 1), optionally tagged with the exact fraction it came from. The
/// tag is only used for display.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaValue {
    value: f64,
    label: Option<String>,
}

impl AlphaValue {
    pub fn new(value: f64) -> Result<Self, SpectralError> {
        if !(0.0..1.0).contains(&value) {
            return Err(SpectralError::BadAlpha(value));
        }
        Ok(Self { value, label: None })
    }

    pub fn ratio(num: u32, den: u32) -> Result<Self, SpectralError> {
        if den == 0 {
            return Err(SpectralError::AlphaParse(format!("{num}/{den}")));
        }
        let mut a = Self::new(num as f64 / den as f64)?;
        a.label = Some(format!("{num}/{den}"));
        Ok(a)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Parses a comma-separated list such as `0,1/4,0.5`.
    pub fn parse_list(text: &str) -> Result<Vec<Self>, SpectralError> {
        text.split(',').map(|s| s.trim().parse()).collect()
    }
}

impl FromStr for AlphaValue {
    type Err = SpectralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || SpectralError::AlphaParse(s.to_string());
        if let Some((num, den)) = s.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| bad())?;
            let den: u32 = den.trim().parse().map_err(|_| bad())?;
            return Self::ratio(num, den);
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        if !v.is_finite() {
            return Err(bad());
        }
        Self::new(v)
    }
}

impl fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => f.write_str(l),
            None => write!(f, "{}", self.value),
        }
    }
}

impl Serialize for AlphaValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlphaValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense row-major A_α(G).
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl AlphaMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect()
    }
}

pub fn a_alpha(g: &Graph, alpha: &AlphaValue) -> AlphaMatrix {
    let n = g.order();
    let a = alpha.value();
    let mut entries = vec![0.0; n * n];
    for v in 0..n {
        entries[v * n + v] = a * g.degree(v) as f64;
        for w in g.neighbor_iter(v) {
            entries[v * n + w] = 1.0 - a;
        }
    }
    AlphaMatrix { n, entries }
}

/// Full spectrum, descending.
pub fn eigen_symmetric(m: &AlphaMatrix) -> Result<Vec<f64>, SpectralError> {
    let d = jacobi::decompose(m.entries.clone(), m.n, false)?;
    let mut values = d.values;
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub lambda: f64,
    /// Unit eigenvector for `lambda`, signed so its entries sum positive.
    pub perron: Vec<f64>,
    /// ‖A_α x − λx‖_∞.
    pub residual: f64,
    /// Descending.
    pub eigenvalues: Vec<f64>,
    /// |Σ eigenvalues − 2αm|.
    pub trace_error: f64,
    pub polished: bool,
}

impl SpectralResult {
    /// ‖x‖₂ − 1.
    pub fn norm_error(&self) -> f64 {
        (self.perron.iter().map(|x| x * x).sum::<f64>().sqrt() - 1.0).abs()
    }

    pub fn perron_is_positive(&self) -> bool {
        self.perron.iter().all(|&x| x > 0.0)
    }
}

pub fn spectral_radius(g: &Graph, alpha: &AlphaValue) -> Result<SpectralResult, SpectralError> {
    let m = a_alpha(g, alpha);
    let n = m.n;
    let d = jacobi::decompose(m.entries.clone(), n, true)?;
    let vectors = d.vectors.expect("vectors requested");
    let top = (0..n).max_by(|&i, &j| d.values[i].total_cmp(&d.values[j])).expect("n ≥ 1");
    let lambda = d.values[top];
    let mut perron: Vec<f64> = (0..n).map(|i| vectors[i * n + top]).collect();
    orient_and_normalize(&mut perron);

    let mut residual = residual_inf(&m, &perron, lambda);
    let mut polished = false;
    if residual > POLISH_THRESHOLD {
        if let Some(mut x) = inverse_iteration(&m, lambda, &perron) {
            orient_and_normalize(&mut x);
            let r = residual_inf(&m, &x, lambda);
            if r < residual {
                perron = x;
                residual = r;
                polished = true;
            }
        }
    }

    let mut eigenvalues = d.values;
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    let trace: f64 = eigenvalues.iter().sum();
    let trace_error = (trace - 2.0 * alpha.value() * g.edge_count() as f64).abs();
    Ok(SpectralResult { lambda, perron, residual, eigenvalues, trace_error, polished })
}

fn orient_and_normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let sign = if x.iter().sum::<f64>() < 0.0 { -1.0 } else { 1.0 };
    for v in x.iter_mut() {
        *v *= sign / norm;
    }
}

fn residual_inf(m: &AlphaMatrix, x: &[f64], lambda: f64) -> f64 {
    m.mul_vec(x)
        .iter()
        .zip(x)
        .map(|(mx, xi)| (mx - lambda * xi).abs())
        .fold(0.0, f64::max)
}

/// Two steps of shifted inverse iteration, solving by Gaussian elimination
/// with partial pivoting.
fn inverse_iteration(m: &AlphaMatrix, lambda: f64, start: &[f64]) -> Option<Vec<f64>> {
    let n = m.n;
    let shift = lambda + 1e-9 * lambda.abs().max(1.0);
    let mut x = start.to_vec();
    for _ in 0..2 {
        let mut a: Vec<f64> = m.entries.clone();
        for i in 0..n {
            a[i * n + i] -= shift;
        }
        let mut b = x.clone();
        for col in 0..n {
            let piv = (col..n).max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))?;
            if a[piv * n + col] == 0.0 {
                return None;
            }
            if piv != col {
                for k in 0..n {
                    a.swap(piv * n + k, col * n + k);
                }
                b.swap(piv, col);
            }
            for r in col + 1..n {
                let f = a[r * n + col] / a[col * n + col];
                if f != 0.0 {
                    for k in col..n {
                        a[r * n + k] -= f * a[col * n + k];
                    }
                    b[r] -= f * b[col];
                }
            }
        }
        for col in (0..n).rev() {
            let s: f64 = (col + 1..n).map(|k| a[col * n + k] * b[k]).sum();
            b[col] = (b[col] - s) / a[col * n + col];
        }
        let norm = b.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return None;
        }
        x = b.into_iter().map(|v| v / norm).collect();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(s: &str) -> AlphaValue {
        s.parse().unwrap()
    }

    #[test]
    fn alpha_parsing() {
        let a = alpha("7/9");
        assert_eq!(a.to_string(), "7/9");
        assert!((a.value() - 7.0 / 9.0).abs() < 1e-16);
        assert_eq!(alpha("0.25").to_string(), "0.25");
        assert!("1".parse::<AlphaValue>().is_err());
        assert!("-0.1".parse::<AlphaValue>().is_err());
        assert!("3/0".parse::<AlphaValue>().is_err());
        assert!("x".parse::<AlphaValue>().is_err());
        assert_eq!(AlphaValue::parse_list("0, 1/2").unwrap().len(), 2);
    }

    #[test]
    fn matrix_entries() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(a_alpha(&k2, &alpha("0")).entries(), &[0.0, 1.0, 1.0, 0.0]);
        assert_eq!(a_alpha(&k2, &alpha("1/2")).entries(), &[0.5, 0.5, 0.5, 0.5]);
        let p3 = Graph::path(3).unwrap();
        let m = a_alpha(&p3, &alpha("0.3"));
        assert!((m.get(1, 1) - 0.6).abs() < 1e-15);
        assert!((m.get(0, 0) - 0.3).abs() < 1e-15);
        assert!((m.get(0, 1) - 0.7).abs() < 1e-15);
        assert_eq!(m.get(0, 2), 0.0);
    }

    #[test]
    fn small_spectra() {
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12);
        let k3 = eigen_symmetric(&a_alpha(&Graph::complete(3).unwrap(), &alpha("0"))).unwrap();
        assert!(close(&k3, &[2.0, -1.0, -1.0]));
        let c4 = eigen_symmetric(&a_alpha(&Graph::cycle(4).unwrap(), &alpha("0"))).unwrap();
        assert!(close(&c4, &[2.0, 0.0, 0.0, -2.0]));
    }

    #[test]
    fn star_at_half_has_radius_two() {
        let r = spectral_radius(&Graph::star(3).unwrap(), &alpha("1/2")).unwrap();
        assert!((r.lambda - 2.0).abs() < 1e-12);
        assert!(r.residual <= 1e-10);
        assert!(r.perron_is_positive());
        assert!(r.norm_error() < 1e-12);
    }
}
