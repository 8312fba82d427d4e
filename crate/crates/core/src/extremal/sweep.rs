use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{spectral_radius, AlphaValue};

/// Bisection stops once the bracket is this narrow.
pub const CROSSOVER_WIDTH: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub alpha: AlphaValue,
    pub lambda: f64,
    pub residual: f64,
}

/// λ_α for every (graph, α) pair, graph-major.
pub fn alpha_sweep(graphs: &[(String, Graph)], alphas: &[AlphaValue]) -> Result<Vec<SweepRow>> {
    let jobs: Vec<(&String, &Graph, &AlphaValue)> =
        graphs.iter().flat_map(|(name, g)| alphas.iter().map(move |a| (name, g, a))).collect();
    jobs.par_iter()
        .map(|&(name, g, a)| {
            let r = spectral_radius(g, a)?;
            Ok(SweepRow { family: name.clone(), alpha: a.clone(), lambda: r.lambda, residual: r.residual })
        })
        .collect()
}

/// CSV with header `family,alpha,lambda,residual`.
pub fn sweep_csv(rows: &[SweepRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "alpha", "lambda", "residual"]).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.alpha.to_string(),
            format!("{:.15}", r.lambda),
            format!("{:.3e}", r.residual),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Invalid(format!("csv: {e}"))
}

/// If λ_α(g1) − λ_α(g2) changes sign between `lo` and `hi`, bisects the
/// bracket down to `CROSSOVER_WIDTH` and returns its midpoint.
pub fn crossover(g1: &Graph, g2: &Graph, lo: &AlphaValue, hi: &AlphaValue) -> Result<Option<f64>> {
    let (mut a, mut b) = (lo.value(), hi.value());
    if a >= b {
        return Err(Error::Invalid(format!("empty bracket [{lo}, {hi}]")));
    }
    let diff = |x: f64| -> Result<f64> {
        let alpha = AlphaValue::new(x)?;
        Ok(spectral_radius(g1, &alpha)?.lambda - spectral_radius(g2, &alpha)?.lambda)
    };
    let (fa, fb) = (diff(a)?, diff(b)?);
    if fa == 0.0 {
        return Ok(Some(a));
    }
    if fb == 0.0 {
        return Ok(Some(b));
    }
    if fa.signum() == fb.signum() {
        return Ok(None);
    }
    while b - a > CROSSOVER_WIDTH {
        let m = 0.5 * (a + b);
        let fm = diff(m)?;
        if fm == 0.0 {
            return Ok(Some(m));
        }
        if fm.signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(Some(0.5 * (a + b)))
}
