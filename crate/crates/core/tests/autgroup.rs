use proptest::prelude::*;
use symclass::autgroup::{automorphism_group, canonical_form, is_isomorphic, MAX_VERTICES};
use symclass::families::{family_graph, Family};
use symclass::{Error, Graph, Permutation};

fn family(f: Family) -> Graph {
    family_graph(&f).unwrap()
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

fn brute_automorphisms(g: &Graph) -> usize {
    all_permutations(g.order())
        .into_iter()
        .filter(|p| g.edges().iter().all(|&(u, v)| g.is_adjacent(p[u], p[v])))
        .count()
}

fn brute_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.order() == g2.order()
        && g1.edge_count() == g2.edge_count()
        && all_permutations(g1.order()).into_iter().any(|p| g1.edges().iter().all(|&(u, v)| g2.is_adjacent(p[u], p[v])))
}

#[test]
fn known_orders() {
    assert_eq!(automorphism_group(&family(Family::Complete { n: 4 })).unwrap().order(), 24);
    assert_eq!(automorphism_group(&family(Family::Hamming { d: 2, q: 3 })).unwrap().order(), 72);
    assert_eq!(automorphism_group(&family(Family::Icosahedron)).unwrap().order(), 120);
    assert_eq!(automorphism_group(&family(Family::Octahedron)).unwrap().order(), 48);
    assert_eq!(automorphism_group(&family(Family::Petersen)).unwrap().order(), 120);
    assert_eq!(automorphism_group(&family(Family::GridComplement { m: 6 })).unwrap().order(), 1440);
    assert_eq!(automorphism_group(&family(Family::Hamming { d: 6, q: 2 })).unwrap().order(), 46080);
    let lp = family(Family::Line { of: Box::new(Family::Petersen) });
    assert_eq!(automorphism_group(&lp).unwrap().order(), 120);
}

#[test]
fn generators_are_automorphisms() {
    let g = family(Family::Icosahedron);
    let aut = automorphism_group(&g).unwrap();
    assert!(aut.generators().iter().all(|p| g.is_automorphism(p)));
}

#[test]
fn isomorphisms() {
    let oct = family(Family::Octahedron);
    let lk4 = family(Family::Line { of: Box::new(Family::Complete { n: 4 }) });
    let phi = is_isomorphic(&oct, &lk4).unwrap().unwrap();
    assert!(oct.is_isomorphism_to(&lk4, &phi));
    assert!(is_isomorphic(&family(Family::Cycle { n: 5 }), &family(Family::Cycle { n: 6 })).unwrap().is_none());
    let gc4 = family(Family::GridComplement { m: 4 });
    let cube = family(Family::Hamming { d: 3, q: 2 });
    let phi = is_isomorphic(&gc4, &cube).unwrap().unwrap();
    assert!(gc4.is_isomorphism_to(&cube, &phi));
    let petersen = family(Family::Petersen);
    let c5c5 = Graph::from_edges(
        10,
        &(0..5).flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, i + 5)]).collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(is_isomorphic(&petersen, &c5c5).unwrap().is_some());
    // same degree sequence, not isomorphic
    let prism =
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    assert!(is_isomorphic(&prism, &family(Family::CompleteBipartite { m: 3, n: 3 })).unwrap().is_none());
}

#[test]
fn size_limits() {
    let h7 = family(Family::Hamming { d: 7, q: 2 });
    assert!(matches!(automorphism_group(&h7), Err(Error::GraphTooLarge { n: 128, cap: MAX_VERTICES })));
    assert!(is_isomorphic(&h7, &family(Family::Cycle { n: 5 })).unwrap().is_none());
    assert!(matches!(automorphism_group(&Graph::empty(0)), Err(Error::EmptyDegree)));
}

#[test]
fn brute_force_on_small_families() {
    for f in [
        Family::Cycle { n: 7 },
        Family::CompleteBipartite { m: 3, n: 4 },
        Family::GridComplement { m: 4 },
        Family::Grid { n: 2, m: 3 },
        Family::Complete { n: 6 },
    ] {
        let g = family(f.clone());
        assert_eq!(automorphism_group(&g).unwrap().order(), brute_automorphisms(&g) as u128, "{f}");
    }
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn arb_relabeled(max: usize) -> impl Strategy<Value = (Graph, Permutation)> {
    arb_graph(max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|(g, v)| (g, Permutation::from_images(v).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_matches_brute_force(g in arb_graph(7)) {
        let aut = automorphism_group(&g).unwrap();
        prop_assert_eq!(aut.order(), brute_automorphisms(&g) as u128);
        prop_assert!(aut.generators().iter().all(|p| g.is_automorphism(p)));
    }

    #[test]
    fn canonical_form_is_invariant((g, p) in arb_relabeled(12)) {
        let h = g.relabel(&p).unwrap();
        let (cg, ch) = (canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(&cg.graph6, &ch.graph6);
        prop_assert_eq!(g.relabel(&cg.labeling).unwrap(), cg.graph);
        let phi = is_isomorphic(&g, &h).unwrap().unwrap();
        prop_assert!(g.is_isomorphism_to(&h, &phi));
    }

    #[test]
    fn isomorphism_matches_brute_force(a in arb_graph(6), b in arb_graph(6)) {
        let fast = is_isomorphic(&a, &b).unwrap();
        prop_assert_eq!(fast.is_some(), brute_isomorphic(&a, &b));
        if let Some(phi) = fast {
            prop_assert!(a.is_isomorphism_to(&b, &phi));
        }
    }
}

fn symmetric_families() -> Vec<Graph> {
    [
        Family::Petersen,
        Family::Icosahedron,
        Family::GridComplement { m: 7 },
        Family::Hamming { d: 5, q: 2 },
        Family::Hamming { d: 3, q: 3 },
        Family::Line { of: Box::new(Family::Petersen) },
        Family::CompleteBipartite { m: 5, n: 5 },
    ]
    .into_iter()
    .map(family)
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_graphs_relabel_consistently(i in 0usize..7, seed in any::<u64>()) {
        let g = symmetric_families().swap_remove(i);
        let n = g.order();
        let mut images: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for k in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            images.swap(k, (state >> 33) as usize % (k + 1));
        }
        let h = g.relabel(&Permutation::from_images(images).unwrap()).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap().graph6, canonical_form(&h).unwrap().graph6);
        prop_assert_eq!(automorphism_group(&g).unwrap().order(), automorphism_group(&h).unwrap().order());
        let phi = is_isomorphic(&g, &h).unwrap().unwrap();
        prop_assert!(g.is_isomorphism_to(&h, &phi));
    }
}
