use aalpha_core::families::FamilySpec;
use aalpha_core::spectra::{a_alpha, bound_lower_star, bound_sandwich, eigen_symmetric, spectral_radius, AlphaValue};
use aalpha_core::Graph;
use proptest::prelude::*;

fn alpha(s: &str) -> AlphaValue {
    s.parse().unwrap()
}

/// Power iteration on A_α + I, which is nonnegative and primitive for
/// connected graphs with at least one edge.
fn power_oracle(g: &Graph, a: f64) -> f64 {
    let n = g.order();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..20_000 {
        let y: Vec<f64> = (0..n)
            .map(|v| {
                let nb: f64 = g.neighbor_iter(v).map(|w| x[w]).sum();
                (a * g.degree(v) as f64 + 1.0) * x[v] + (1.0 - a) * nb
            })
            .collect();
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        let next = y.iter().zip(&x).map(|(p, q)| p * q).sum::<f64>() / x.iter().map(|t| t * t).sum::<f64>();
        x = y.into_iter().map(|t| t / norm).collect();
        if (next - lambda).abs() < 1e-15 {
            lambda = next;
            break;
        }
        lambda = next;
    }
    lambda - 1.0
}

#[test]
fn closed_forms() {
    for n in 2..=12 {
        for a in ["0", "1/4", "1/2", "0.9"] {
            let al = alpha(a);
            let k = spectral_radius(&Graph::complete(n).unwrap(), &al).unwrap().lambda;
            assert!((k - (n - 1) as f64).abs() < 1e-12);
            let v = al.value();
            let nf = n as f64;
            let star = 0.5 * (v * nf + (v * v * nf * nf + 4.0 * (nf - 1.0) * (1.0 - 2.0 * v)).sqrt());
            let s = spectral_radius(&Graph::star(n - 1).unwrap(), &al).unwrap().lambda;
            assert!((s - star).abs() < 1e-12, "star n = {n}, α = {a}");
            assert!((bound_lower_star(n - 1, &al) - star).abs() < 1e-12);
        }
    }
}

#[test]
fn two_clique_graph_at_one_half() {
    let g = FamilySpec::Fst(3, 3).make().unwrap();
    assert!((spectral_radius(&g, &alpha("1/2")).unwrap().lambda - 2.5).abs() < 1e-12);
}

#[test]
fn matches_power_iteration() {
    let graphs = [
        FamilySpec::G12([2, 1, 1, 2]).make().unwrap(),
        FamilySpec::G13([2, 0, 2, 2]).make().unwrap(),
        FamilySpec::Tabc(1, 2, 5).make().unwrap(),
        FamilySpec::IndJoin(5, 9).make().unwrap(),
        Graph::path(11).unwrap(),
    ];
    for g in &graphs {
        for a in ["0", "0.3", "1/2", "0.9"] {
            let got = spectral_radius(g, &alpha(a)).unwrap().lambda;
            let want = power_oracle(g, alpha(a).value());
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
    }
}

#[test]
fn alpha_validation() {
    assert!(AlphaValue::new(1.0).is_err());
    assert!(AlphaValue::new(-0.1).is_err());
    assert!(AlphaValue::new(f64::NAN).is_err());
    assert!("1/0".parse::<AlphaValue>().is_err());
    assert_eq!(alpha("3/4").to_string(), "3/4");
    assert_eq!(AlphaValue::parse_list("0, 1/2,0.9").unwrap().len(), 3);
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (2usize..=14).prop_flat_map(|n| {
        (proptest::collection::vec(0usize..1000, n - 1), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
            .prop_map(move |(parents, extra)| {
                let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1] % v, v)).collect();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if extra[k] && k % 3 == 0 && !edges.contains(&(i, j)) {
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
    fn solver_invariants(g in arb_connected(), a in 0.0f64..0.99) {
        let al = AlphaValue::new(a).unwrap();
        let r = spectral_radius(&g, &al).unwrap();
        prop_assert!(r.residual <= 1e-10);
        prop_assert!(r.trace_error <= 1e-10);
        prop_assert!(r.norm_error() <= 1e-12);
        prop_assert!(r.perron_is_positive());
        let (lo, hi) = bound_sandwich(&g, &al);
        prop_assert!(lo <= r.lambda + 1e-10 && r.lambda <= hi + 1e-10);
        let all = eigen_symmetric(&a_alpha(&g, &al)).unwrap();
        prop_assert!((all[0] - r.lambda).abs() < 1e-10);
    }

    #[test]
    fn relabelling_preserves_radius(g in arb_connected(), a in 0.0f64..0.99) {
        let n = g.order();
        let perm: Vec<usize> = (0..n).rev().collect();
        let al = AlphaValue::new(a).unwrap();
        let l1 = spectral_radius(&g, &al).unwrap().lambda;
        let l2 = spectral_radius(&g.permute(&perm).unwrap(), &al).unwrap().lambda;
        prop_assert!((l1 - l2).abs() < 1e-11);
    }
}
