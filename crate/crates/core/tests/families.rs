use aalpha_core::families::{catalog, family_degree_vector, match_family, FamilySpec};
use aalpha_core::graph::{canonical_form, independence_number};
use aalpha_core::Graph;

/// Maximum independent set of a forest by repeatedly taking a leaf.
fn forest_independence(g: &Graph) -> usize {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut size = 0;
    loop {
        let deg = |v: usize, alive: &[bool]| g.neighbor_iter(v).filter(|&w| alive[w]).count();
        let Some(v) = (0..n).find(|&v| alive[v] && deg(v, &alive) <= 1) else { break };
        size += 1;
        alive[v] = false;
        for w in g.neighbor_iter(v).collect::<Vec<_>>() {
            alive[w] = false;
        }
    }
    size
}

fn tuples(total: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            for c in 0..=total - a - b {
                out.push([a, b, c, total - a - b - c]);
            }
        }
    }
    out
}

#[test]
fn spine_trees_have_independence_n_minus_four() {
    let mut violators = Vec::new();
    for total in 0..=9 {
        for m in tuples(total) {
            for spec in [FamilySpec::G12(m), FamilySpec::G13(m)] {
                let g = spec.make().unwrap();
                let n = g.order();
                assert_eq!(n, total + 7);
                assert!(g.is_tree(), "{spec}");
                let oracle = forest_independence(&g);
                assert_eq!(independence_number(&g).size, oracle, "{spec}");
                if oracle != n - 4 {
                    println!("{spec}: independence number {oracle}, order {n}");
                    violators.push(spec.to_string());
                }
            }
        }
    }
    // the bare spines are P₇ and T_{2,2,2}, both with i = n − 3
    assert_eq!(violators, ["g12:0,0,0,0", "g13:0,0,0,0"]);
}

#[test]
fn degree_vectors() {
    for total in 0..=6 {
        for m in tuples(total) {
            for spec in [FamilySpec::G12(m), FamilySpec::G13(m)] {
                let g = spec.make().unwrap();
                let d = family_degree_vector(&spec).unwrap();
                assert_eq!(d, [g.degree(0), g.degree(1), g.degree(2), g.degree(3)], "{spec}");
                assert_eq!(d.iter().sum::<usize>(), g.order() - 1);
            }
        }
    }
    assert_eq!(family_degree_vector(&FamilySpec::G12([2, 1, 1, 2])).unwrap(), [3, 3, 3, 3]);
    assert_eq!(family_degree_vector(&FamilySpec::G13([2, 0, 2, 2])).unwrap(), [3, 3, 3, 3]);
    assert_eq!(family_degree_vector(&FamilySpec::G12([1, 1, 1, 1])).unwrap(), [2, 3, 3, 2]);
    assert_eq!(family_degree_vector(&FamilySpec::G12([0, 0, 0, 0])).unwrap(), [1, 2, 2, 1]);
    assert!(family_degree_vector(&FamilySpec::Path(4)).is_err());
}

#[test]
fn spine_symmetries() {
    for m in tuples(4) {
        let [a, b, c, d] = m;
        let g12 = FamilySpec::G12(m).canonical().unwrap();
        assert_eq!(g12, FamilySpec::G12([d, c, b, a]).canonical().unwrap());
        let g13 = FamilySpec::G13(m).canonical().unwrap();
        for arms in [[a, b, d, c], [c, b, a, d], [d, b, c, a]] {
            assert_eq!(g13, FamilySpec::G13(arms).canonical().unwrap());
        }
    }
    assert_eq!(FamilySpec::G12([0; 4]).canonical().unwrap(), FamilySpec::Path(7).canonical().unwrap());
}

#[test]
fn two_cliques_are_a_bipartite_complement() {
    for (s, t) in [(1, 5), (2, 4), (3, 3), (2, 2)] {
        // K_{s,t} minus one cross edge, then complement
        let mut edges = Vec::new();
        for u in 0..s {
            for v in s..s + t {
                if (u, v) != (0, s) {
                    edges.push((u, v));
                }
            }
        }
        let oracle = Graph::build(s + t, &edges).unwrap().complement();
        let g = FamilySpec::Fst(s, t).make().unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&oracle).unwrap());
    }
    let mut deg = FamilySpec::Fst(3, 3).make().unwrap().degree_sequence();
    deg.sort();
    assert_eq!(deg, [2, 2, 2, 2, 3, 3]);
}

#[test]
fn spiders_have_one_major_vertex() {
    for n in 4..=12 {
        let g = FamilySpec::Tabc(1, 1, n - 3).make().unwrap();
        assert_eq!(g.order(), n);
        assert_eq!(g.degrees().iter().filter(|&&d| d >= 3).count(), 1);
    }
}

#[test]
fn join_shape() {
    let g = FamilySpec::IndJoin(4, 8).make().unwrap();
    let mut deg = g.degree_sequence();
    deg.sort();
    assert_eq!(deg, [4, 4, 4, 4, 7, 7, 7, 7]);
    assert_eq!(independence_number(&g).size, 4);
}

#[test]
fn parameter_validation() {
    assert!(FamilySpec::g13([2, -1, 2, 1]).is_err());
    assert!(FamilySpec::Tabc(0, 1, 2).make().is_err());
    assert!(FamilySpec::IndJoin(5, 5).make().is_err());
    assert!(FamilySpec::Cycle(2).make().is_err());
    assert!(FamilySpec::G12([30, 30, 0, 0]).make().is_err());
}

#[test]
fn text_forms_round_trip() {
    for s in ["path:5", "cycle:7", "complete:4", "star:6", "tabc:1,2,3", "fst:3,3", "indjoin:5,9", "g12:2,1,1,2", "g13:2,0,2,2"] {
        let spec: FamilySpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
        assert_eq!(serde_json::to_string(&spec).unwrap(), format!("\"{s}\""));
    }
    assert!("g12:1,2".parse::<FamilySpec>().is_err());
    assert!("wheel:5".parse::<FamilySpec>().is_err());
}

#[test]
fn catalog_labels_its_own_members() {
    let cat = catalog(11);
    let form = FamilySpec::G12([1, 1, 1, 1]).canonical().unwrap();
    assert!(match_family(&cat, &form).contains(&FamilySpec::G12([1, 1, 1, 1])));
    let path = FamilySpec::Path(11).canonical().unwrap();
    assert!(match_family(&cat, &path).contains(&FamilySpec::Path(11)));
}
