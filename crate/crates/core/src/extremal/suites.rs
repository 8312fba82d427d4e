//! Seeded property suites for the monotonicity transforms, the spectral
//! bounds, quotient radii and the G12/G13 inequalities. Each suite draws
//! its instances from its own ChaCha stream, so results depend only on the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::verify::{verify_theorem, TheoremId, VerifyParams};
use super::{ClassCache, Status, STRICT_MARGIN};
use crate::error::Result;
use crate::families::FamilySpec;
use crate::graph::{are_similar, independence_number, Graph};
use crate::quotient::{quotient_matrix, refine_to_equitable, Partition};
use crate::spectra::{bound_lower_star, bound_lower_star_piecewise, bound_sandwich, spectral_radius, AlphaValue};

/// Slack on the two sides of the bound checks.
pub const BOUND_SLACK: f64 = 1e-10;
/// Perron components of similar vertices agree within this.
pub const SIMILAR_TOLERANCE: f64 = 1e-9;
/// Quotient and full radii agree within this.
pub const QUOTIENT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_INSTANCES: usize = 60;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub instances: usize,
    pub checks: usize,
    /// Smallest strict gap seen, or largest error for the equality suites.
    pub worst: f64,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str, worst: f64) -> Self {
        Self { name, instances: 0, checks: 0, worst, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records λ_after − λ_before > STRICT_MARGIN.
    fn increase(&mut self, label: impl FnOnce() -> String, before: f64, after: f64) {
        self.checks += 1;
        let gap = after - before;
        self.worst = self.worst.min(gap);
        if gap <= STRICT_MARGIN {
            self.violations.push(format!("{}: {before} → {after}", label()));
        }
    }

    fn error(&mut self, label: impl FnOnce() -> String, err: f64, tol: f64) {
        self.checks += 1;
        self.worst = self.worst.max(err);
        if !(err <= tol) {
            self.violations.push(format!("{}: error {err:.3e}", label()));
        }
    }
}

fn alphas(list: &str) -> Vec<AlphaValue> {
    AlphaValue::parse_list(list).expect("static α lists parse")
}

fn lambda(g: &Graph, alpha: &AlphaValue) -> Result<f64> {
    Ok(spectral_radius(g, alpha)?.lambda)
}

/// A random spanning tree on n vertices plus each other edge with probability p.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("valid edge list")
}

fn stream(seed: u64, salt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(salt);
    rng
}

/// Subdividing an edge on an internal path lowers λ_α.
pub fn subdivision(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 1);
    let grid = alphas("0,0.3,0.5,0.8");
    let mut rep = SuiteReport::new("subdivision", f64::INFINITY);
    while rep.instances < instances {
        let n = rng.gen_range(6..=12);
        let g = random_connected(&mut rng, n, 0.08);
        let paths = g.internal_paths();
        let Some(path) = paths.choose(&mut rng) else { continue };
        let i = rng.gen_range(0..path.len() - 1);
        let (u, v) = (path[i], path[i + 1]);
        let h = g.subdivide_edge(u, v)?;
        rep.instances += 1;
        for a in &grid {
            rep.increase(|| format!("subdivide {u}{v}, α = {a}"), lambda(&h, a)?, lambda(&g, a)?);
        }
    }
    Ok(rep)
}

/// Deleting an edge or a vertex of a connected graph lowers λ_α.
pub fn proper_subgraph(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 2);
    let grid = alphas("0,0.5,0.9");
    let mut rep = SuiteReport::new("proper-subgraph", f64::INFINITY);
    while rep.instances < instances {
        let n = rng.gen_range(3..=10);
        let g = random_connected(&mut rng, n, 0.3);
        let (what, h) = if rng.gen_bool(0.5) {
            let edges: Vec<_> = g.edges().collect();
            let &(u, v) = edges.choose(&mut rng).expect("connected graphs with n ≥ 2 have edges");
            (format!("delete edge {u}{v}"), g.remove_edge(u, v)?)
        } else {
            let v = rng.gen_range(0..n);
            (format!("delete vertex {v}"), g.remove_vertex(v)?)
        };
        rep.instances += 1;
        for a in &grid {
            rep.increase(|| format!("{what}, α = {a}"), lambda(&h, a)?, lambda(&g, a)?);
        }
    }
    Ok(rep)
}

fn similar_pairs(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if are_similar(g, u, v)? {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// Moving one pendant from the lighter to the heavier of two similar
/// vertices raises λ_α.
pub fn pendant_shift(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 3);
    let grid = alphas("0,0.5,0.9");
    let mut rep = SuiteReport::new("pendant-shift", f64::INFINITY);
    while rep.instances < instances {
        let n = rng.gen_range(4..=9);
        let g = random_connected(&mut rng, n, 0.15);
        let pairs = similar_pairs(&g)?;
        let Some(&(u, v)) = pairs.choose(&mut rng) else { continue };
        let t = rng.gen_range(1..=3);
        let s = rng.gen_range(t..=4);
        let with = |s: usize, t: usize| -> Result<Graph> { Ok(g.attach_pendants(u, s)?.attach_pendants(v, t)?) };
        let (before, after) = (with(s, t)?, with(s + 1, t - 1)?);
        rep.instances += 1;
        for a in &grid {
            rep.increase(|| format!("({s},{t}) at {u},{v}, α = {a}"), lambda(&before, a)?, lambda(&after, a)?);
        }
    }
    Ok(rep)
}

/// Moving edges from u to a vertex v with x_v ≥ x_u raises λ_α.
pub fn rewire(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 4);
    let grid = alphas("0,0.5,0.8");
    let mut rep = SuiteReport::new("rewire", f64::INFINITY);
    while rep.instances < instances {
        let n = rng.gen_range(4..=10);
        let g = random_connected(&mut rng, n, 0.25);
        let alpha = grid.choose(&mut rng).expect("nonempty grid");
        let x = spectral_radius(&g, alpha)?.perron;
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let (u, v) = if x[b] >= x[a] { (a, b) } else { (b, a) };
        let movable: Vec<usize> = g.neighbor_iter(u).filter(|&w| w != v && !g.has_edge(v, w)).collect();
        if movable.is_empty() {
            continue;
        }
        let take = rng.gen_range(1..=movable.len());
        let ys: Vec<usize> = movable.choose_multiple(&mut rng, take).copied().collect();
        let h = g.rewire(u, v, &ys)?;
        rep.instances += 1;
        rep.increase(|| format!("move {ys:?} from {u} to {v}, α = {alpha}"), lambda(&g, alpha)?, lambda(&h, alpha)?);
    }
    Ok(rep)
}

/// Similar vertices carry equal Perron components.
pub fn automorphism(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 5);
    let grid = alphas("0,0.5,0.9");
    let mut rep = SuiteReport::new("automorphism", 0.0);
    while rep.instances < instances {
        let n = rng.gen_range(4..=10);
        let g = random_connected(&mut rng, n, 0.2);
        let pairs = similar_pairs(&g)?;
        if pairs.is_empty() {
            continue;
        }
        rep.instances += 1;
        for a in &grid {
            let x = spectral_radius(&g, a)?.perron;
            for &(u, v) in &pairs {
                rep.error(|| format!("x_{u} vs x_{v}, α = {a}"), (x[u] - x[v]).abs(), SIMILAR_TOLERANCE);
            }
        }
    }
    Ok(rep)
}

/// 2m/n ≤ λ_α ≤ max over edges, and λ_α is at least the star bound for Δ.
pub fn bounds(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 6);
    let grid = alphas("0,1/4,1/2,3/4,9/10");
    let mut rep = SuiteReport::new("bounds", 0.0);
    while rep.instances < instances {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.0..0.8);
        let g = random_connected(&mut rng, n, p);
        rep.instances += 1;
        for a in &grid {
            let l = lambda(&g, a)?;
            let (lo, hi) = bound_sandwich(&g, a);
            let star = bound_lower_star(g.max_degree(), a);
            let piecewise = bound_lower_star_piecewise(g.max_degree(), a);
            let worst = (lo - l).max(l - hi).max(star - l).max(piecewise - l).max(0.0);
            rep.error(|| format!("n = {n}, m = {}, α = {a}, λ = {l}", g.edge_count()), worst, BOUND_SLACK);
        }
    }
    Ok(rep)
}

/// The quotient of an equitable partition has the same spectral radius.
pub fn quotient_radius(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 7);
    let grid = alphas("0,0.5,0.8");
    let mut rep = SuiteReport::new("quotient-radius", 0.0);
    while rep.instances < instances {
        let n = rng.gen_range(3..=14);
        let p = rng.gen_range(0.0..0.5);
        let g = random_connected(&mut rng, n, p);
        let part = refine_to_equitable(&g, &Partition::by_degree(&g))?;
        rep.instances += 1;
        for a in &grid {
            let q = quotient_matrix(&g, &part, a)?.spectral_radius()?;
            let l = lambda(&g, a)?;
            rep.error(|| format!("n = {n}, {} cells, α = {a}", part.len()), (q - l).abs(), QUOTIENT_TOLERANCE);
        }
    }
    Ok(rep)
}

/// Within 𝒢_{n,i}, λ_α is at most that of K_i^c ∨ K_{n−i}, with equality only there.
pub fn join_bound(seed: u64, instances: usize) -> Result<SuiteReport> {
    let mut rng = stream(seed, 8);
    let grid = alphas("0,0.5,0.9");
    let mut rep = SuiteReport::new("join-bound", f64::INFINITY);
    while rep.instances < instances {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_connected(&mut rng, n, p);
        let i = independence_number(&g).size;
        if i == n || i == 1 {
            // only the star and K_n, both of which are the join itself
            continue;
        }
        let join = FamilySpec::IndJoin(i, n).make()?;
        if crate::graph::canonical_form(&join)? == crate::graph::canonical_form(&g)? {
            continue;
        }
        rep.instances += 1;
        for a in &grid {
            rep.increase(|| format!("n = {n}, i = {i}, α = {a}"), lambda(&g, a)?, lambda(&join, a)?);
        }
    }
    Ok(rep)
}

fn from_driver(name: &'static str, id: TheoremId, seed: u64, instances: usize) -> Result<SuiteReport> {
    let params = VerifyParams { seed, instances, ..VerifyParams::default() };
    let report = verify_theorem(id, &params, &ClassCache::new())?;
    let checks = report.details["comparisons"].as_u64().unwrap_or(0) as usize;
    let sized = report.details["pairs"].as_u64().or_else(|| report.details["trees"].as_u64()).unwrap_or(0);
    let mut rep = SuiteReport::new(name, 0.0);
    rep.instances = sized as usize;
    rep.checks = checks;
    rep.worst = report.details["violations"].as_u64().unwrap_or(0) as f64;
    if report.status != Status::Pass {
        rep.violations = report.findings;
    }
    Ok(rep)
}

/// G12/G13 pairs of equal order: larger Δ, larger λ_α on [1/2, 1).
pub fn delta_gap(seed: u64, instances: usize) -> Result<SuiteReport> {
    from_driver("delta-gap", TheoremId::DeltaGap, seed, instances)
}

/// Spine components x_{u₁} ≤ x_{u₂} and the component ratio identity on G12.
pub fn spine_components(seed: u64) -> Result<SuiteReport> {
    from_driver("spine-components", TheoremId::Evec, seed, 0)
}

pub fn run_all(seed: u64, instances: usize) -> Result<Vec<SuiteReport>> {
    Ok(vec![
        subdivision(seed, instances)?,
        proper_subgraph(seed, instances)?,
        pendant_shift(seed, instances)?,
        rewire(seed, instances)?,
        automorphism(seed, instances)?,
        bounds(seed, instances)?,
        quotient_radius(seed, instances.max(100))?,
        join_bound(seed, instances)?,
        delta_gap(seed, instances)?,
        spine_components(seed)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_connected() {
        let mut rng = stream(7, 0);
        for n in 1..12 {
            let g = random_connected(&mut rng, n, 0.2);
            assert!(g.is_connected());
            assert_eq!(g.order(), n);
        }
    }

    #[test]
    fn suites_are_reproducible() {
        let a = subdivision(11, 5).unwrap();
        let b = subdivision(11, 5).unwrap();
        assert_eq!(a.worst, b.worst);
        assert_eq!(a.checks, 20);
        assert!(a.passed());
    }
}
