//! wasm-bindgen bindings for the browser demo in `www/`. Every export
//! returns a JSON string; the plain functions underneath are what the
//! native tests exercise.

use aalpha_core::enumeration::{decode_graph6, encode_graph6};
use aalpha_core::extremal::{alpha_sweep, class_members, extremize, ClassKey, Direction, Scope};
use aalpha_core::families::{catalog, FamilySpec};
use aalpha_core::graph::independence_number;
use aalpha_core::spectra::{bound_sandwich, spectral_radius, AlphaValue};
use aalpha_core::Graph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Trees have independence number at least n/2, so n − 4 needs n ≥ 8.
pub const MIN_DEMO_ORDER: usize = 8;
/// Largest tree order the demo will search; bigger classes stall the page.
pub const MAX_DEMO_ORDER: usize = 13;
const MAX_SWEEP_POINTS: usize = 1000;

type Result<T> = std::result::Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// A family spec such as `g12:2,1,1,2`, or failing that a graph6 string.
fn parse_graph(text: &str) -> Result<(String, Graph)> {
    let text = text.trim();
    if text.contains(':') {
        let spec: FamilySpec = text.parse().map_err(err)?;
        return Ok((spec.to_string(), spec.make().map_err(err)?));
    }
    Ok((text.to_string(), decode_graph6(text).map_err(err)?))
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u, v]).collect()
}

pub fn spectrum_value(source: &str, alpha: &str) -> Result<Value> {
    let (name, g) = parse_graph(source)?;
    let a: AlphaValue = alpha.parse().map_err(err)?;
    let r = spectral_radius(&g, &a).map_err(err)?;
    let (lower, upper) = bound_sandwich(&g, &a);
    Ok(json!({
        "graph": name,
        "graph6": encode_graph6(&g).map_err(err)?,
        "order": g.order(),
        "edges": edges(&g),
        "independence_number": independence_number(&g).size,
        "alpha": a,
        "lambda": r.lambda,
        "perron": r.perron,
        "residual": r.residual,
        "lower": lower,
        "upper": upper,
    }))
}

/// `sources` holds one graph per line.
pub fn sweep_value(sources: &str, from: f64, to: f64, step: f64) -> Result<Value> {
    if !(step > 0.0 && from <= to) {
        return Err(format!("bad range {from}..{to} step {step}"));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    if count > MAX_SWEEP_POINTS {
        return Err(format!("{count} points exceeds the limit of {MAX_SWEEP_POINTS}"));
    }
    let alphas = (0..count)
        .map(|k| {
            let v: f64 = format!("{:.12}", from + k as f64 * step).parse().map_err(err)?;
            AlphaValue::new(v).map_err(err)
        })
        .collect::<Result<Vec<_>>>()?;
    let graphs = sources
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph)
        .collect::<Result<Vec<_>>>()?;
    let rows = alpha_sweep(&graphs, &alphas).map_err(err)?;
    let series: Vec<Value> = graphs
        .iter()
        .enumerate()
        .map(|(gi, (name, _))| {
            let points: Vec<[f64; 2]> =
                rows[gi * count..(gi + 1) * count].iter().map(|r| [r.alpha.value(), r.lambda]).collect();
            json!({ "graph": name, "points": points })
        })
        .collect();
    Ok(json!({ "series": series }))
}

/// Trees of order `n` with independence number `n − 4` minimizing λ_α.
pub fn minimizers_value(n: usize, alpha: &str) -> Result<Value> {
    if !(MIN_DEMO_ORDER..=MAX_DEMO_ORDER).contains(&n) {
        return Err(format!("order must lie in {MIN_DEMO_ORDER}..={MAX_DEMO_ORDER}"));
    }
    let a: AlphaValue = alpha.parse().map_err(err)?;
    let key = ClassKey::new(n, n - 4, Scope::TreesOnly).map_err(err)?;
    let members = class_members(&key).map_err(err)?;
    let cert = extremize(&key, &members, &a, Direction::Min, &catalog(n)).map_err(err)?;
    let winners: Vec<Value> = cert
        .winners
        .iter()
        .map(|w| {
            json!({
                "graph6": w.graph6,
                "families": w.family_match.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "lambda": w.lambda,
                "edges": edges(&w.graph),
            })
        })
        .collect();
    Ok(json!({
        "n": n,
        "alpha": a,
        "class_size": cert.evaluated_count,
        "optimum": cert.optimum,
        "runner_up": cert.runner_up,
        "winners": winners,
    }))
}

fn to_js(v: Result<Value>) -> std::result::Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum(source: &str, alpha: &str) -> std::result::Result<String, JsValue> {
    to_js(spectrum_value(source, alpha))
}

#[wasm_bindgen]
pub fn sweep(sources: &str, from: f64, to: f64, step: f64) -> std::result::Result<String, JsValue> {
    to_js(sweep_value(sources, from, to, step))
}

#[wasm_bindgen]
pub fn minimizers(n: usize, alpha: &str) -> std::result::Result<String, JsValue> {
    to_js(minimizers_value(n, alpha))
}
