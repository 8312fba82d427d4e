use aalpha_core::families::FamilySpec;
use aalpha_core::quotient::{
    charpoly_exact, check_g12_pair, is_equitable, parse_matrix, parse_poly, quotient_matrix, refine_to_equitable,
    six_cell_partition, PairConfig, Partition, Poly, BALANCED_QUOTIENT, CLAIMED_DIFFERENCE, SHIFTED_QUOTIENT,
};
use aalpha_core::spectra::{spectral_radius, AlphaValue};
use aalpha_core::Graph;
use proptest::prelude::*;

fn alpha(s: &str) -> AlphaValue {
    s.parse().unwrap()
}

/// Determinant by Gaussian elimination with partial pivoting.
fn det(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        if a[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    d
}

#[test]
fn equitable_examples() {
    let star = Graph::star(3).unwrap();
    assert!(is_equitable(&star, &Partition::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap()).unwrap());
    let p4 = Graph::path(4).unwrap();
    assert!(is_equitable(&p4, &Partition::new(4, vec![vec![0, 3], vec![1, 2]]).unwrap()).unwrap());
    assert!(!is_equitable(&p4, &Partition::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap()).unwrap());
    let refined = refine_to_equitable(&star, &Partition::trivial(4)).unwrap();
    assert_eq!(refined.sizes().iter().copied().collect::<std::collections::BTreeSet<_>>(), [1, 3].into());
    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(refine_to_equitable(&c6, &Partition::trivial(6)).unwrap().len(), 1);
    let q = quotient_matrix(&c6, &Partition::trivial(6), &alpha("0.3")).unwrap();
    assert_eq!(q.dim(), 1);
    assert!((q.get(0, 0) - 2.0).abs() < 1e-15);
}

#[test]
fn degree_seed_recovers_six_cells() {
    let g = FamilySpec::G12([1, 1, 1, 1]).make().unwrap();
    let refined = refine_to_equitable(&g, &Partition::by_degree(&g)).unwrap();
    let mut got: Vec<Vec<usize>> = refined.cells().to_vec();
    let mut want: Vec<Vec<usize>> = six_cell_partition([1, 1, 1, 1]).unwrap().cells().to_vec();
    got.iter_mut().chain(want.iter_mut()).for_each(|c| c.sort());
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn two_clique_quotient() {
    let g = FamilySpec::Fst(3, 3).make().unwrap();
    let p = Partition::new(6, vec![vec![0, 3], vec![1, 2, 4, 5]]).unwrap();
    for a in [0.0, 0.25, 0.5, 0.77] {
        let q = quotient_matrix(&g, &p, &AlphaValue::new(a).unwrap()).unwrap();
        let want = [[2.0 * a + 1.0, 2.0 * (1.0 - a)], [1.0 - a, a + 1.0]];
        for (i, row) in want.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                assert!((q.get(i, j) - w).abs() < 1e-15);
            }
        }
    }
    let sym = parse_matrix(&[&["2a+1", "2(1-a)"], &["1-a", "a+1"]]).unwrap();
    let f = charpoly_exact(&sym).unwrap();
    assert_eq!(f, parse_poly("x^2 - (3a+2)x + 7a - 1").unwrap());
    // largest root at α = 1/2 of x² − 3.5x + 2.5
    let root = (3.5 + (3.5f64 * 3.5 - 10.0).sqrt()) / 2.0;
    assert!((root - 2.5).abs() < 1e-15);
    assert!(f.eval(2.5, 0.5, 0.0).abs() < 1e-12);
    assert!((spectral_radius(&g, &alpha("1/2")).unwrap().lambda - root).abs() < 1e-10);
}

#[test]
fn join_quotient() {
    let g = FamilySpec::IndJoin(4, 8).make().unwrap();
    let p = Partition::new(8, vec![(0..4).collect(), (4..8).collect()]).unwrap();
    let q = quotient_matrix(&g, &p, &alpha("0")).unwrap();
    assert_eq!([q.get(0, 0), q.get(0, 1), q.get(1, 0), q.get(1, 1)], [0.0, 4.0, 4.0, 3.0]);
    let full = spectral_radius(&g, &alpha("0")).unwrap().lambda;
    assert!((q.spectral_radius().unwrap() - full).abs() < 1e-12);
}

#[test]
fn charpoly_agrees_with_numeric_determinant() {
    for rows in [&BALANCED_QUOTIENT, &SHIFTED_QUOTIENT] {
        let slices: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
        let sym = parse_matrix(&slices).unwrap();
        let f = charpoly_exact(&sym).unwrap();
        for (x, a, k) in [(3.1, 0.5, 2.0), (0.7, 0.9, 5.0), (-1.3, 0.61, 3.0), (4.4, 0.2, 7.5)] {
            let m: Vec<Vec<f64>> = sym
                .iter()
                .enumerate()
                .map(|(i, r)| r.iter().enumerate().map(|(j, e)| if i == j { x } else { 0.0 } - e.eval(0.0, a, k)).collect())
                .collect();
            let want = det(m);
            let got = f.eval(x, a, k);
            assert!((got - want).abs() <= 1e-8 * want.abs().max(1.0), "{got} vs {want}");
        }
    }
}

#[test]
fn printed_difference_transcription() {
    let from_statement =
        parse_poly("x[(-a^3+2a^2-a)x^2 + (2a^4-2a^3-3a^2+4a-1)x - 4a^4+10a^3-8a^2+2a]").unwrap();
    assert_eq!(parse_poly(CLAIMED_DIFFERENCE).unwrap(), from_statement);
}

#[test]
fn balanced_pair_report() {
    let r = check_g12_pair(&PairConfig::default()).unwrap();
    assert!(r.numeric_ok);
    assert!(r.gaps.iter().all(|g| g.margin > 1e-10));
    assert!(r.gaps.iter().all(|g| g.balanced_root_residual < 1e-8 && g.shifted_root_residual < 1e-8));
    assert!(r.radius.iter().all(|x| (x.quotient_radius - x.full_radius).abs() <= 1e-10));
    // the computed difference is the printed one even though the printed
    // expansions are attached to the opposite trees
    assert!(r.comparisons[2].matches);
    assert!(r.claimed_swapped);
    assert!(!r.symbolic_ok);
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..6).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, i, j, l)| {
            let text = format!("{c}*x^{i}*a^{j}*k^{l}");
            acc + parse_poly(&text).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_identities(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}
