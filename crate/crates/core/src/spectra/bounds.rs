use super::AlphaValue;
use crate::graph::Graph;

/// Lower bound on λ_α in terms of the maximum degree Δ; attained by K_{1,Δ}.
pub fn bound_lower_star(delta_max: usize, alpha: &AlphaValue) -> f64 {
    let a = alpha.value();
    let d = delta_max as f64;
    0.5 * (a * (d + 1.0) + (a * a * (d + 1.0) * (d + 1.0) + 4.0 * d * (1.0 - 2.0 * a)).sqrt())
}

/// The weaker piecewise form: α(Δ+1) for α ≤ 1/2 and αΔ + (1−α)²/α above.
pub fn bound_lower_star_piecewise(delta_max: usize, alpha: &AlphaValue) -> f64 {
    let a = alpha.value();
    let d = delta_max as f64;
    if a <= 0.5 {
        a * (d + 1.0)
    } else {
        a * d + (1.0 - a) * (1.0 - a) / a
    }
}

/// (average degree, max over edges uv of αd(u) + (1−α)d(v) in either orientation).
/// An edgeless graph has both bounds 0.
pub fn bound_sandwich(g: &Graph, alpha: &AlphaValue) -> (f64, f64) {
    let a = alpha.value();
    let lower = 2.0 * g.edge_count() as f64 / g.order() as f64;
    let upper = g
        .edges()
        .map(|(u, v)| {
            let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
            (a * du + (1.0 - a) * dv).max(a * dv + (1.0 - a) * du)
        })
        .fold(0.0, f64::max);
    (lower, upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(s: &str) -> AlphaValue {
        s.parse().unwrap()
    }

    #[test]
    fn star_bound_values() {
        assert!((bound_lower_star(4, &alpha("0")) - 2.0).abs() < 1e-15);
        assert!((bound_lower_star(3, &alpha("1/2")) - 2.0).abs() < 1e-15);
        for d in 1..10 {
            let h = alpha("1/2");
            let left = 0.5 * (d as f64 + 1.0);
            assert!((bound_lower_star_piecewise(d, &h) - left).abs() < 1e-15);
            let right = 0.5 * d as f64 + 0.25 / 0.5;
            assert!((left - right).abs() < 1e-15);
        }
    }

    #[test]
    fn sandwich_values() {
        let (lo, hi) = bound_sandwich(&Graph::cycle(6).unwrap(), &alpha("0.3"));
        assert_eq!((lo, hi), (2.0, 2.0));
        let (lo, hi) = bound_sandwich(&Graph::star(3).unwrap(), &alpha("0"));
        assert_eq!(lo, 1.5);
        assert_eq!(hi, 3.0);
    }
}
