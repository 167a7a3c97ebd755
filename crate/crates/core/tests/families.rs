use symclass::autgroup::automorphism_group;
use symclass::classify::check_condition_3_1;
use symclass::families::{
    agl1, alt, build_graph, build_group, condition_3_1_examples, icosahedral, icosahedral_rotations, line_group,
    octahedral, petersen_s5, psl2_5, row_swap_times, sym, two_homog_frobenius, two_transitive_not_three, wreath_grid,
    wreath_hamming, Family, GroupSpec, VertexLabel,
};
use symclass::graph::{diameter, girth};
use symclass::permgroup::transitivity_degree_tests;
use symclass::Error;

#[test]
fn graph_parameters() {
    let cases = [
        (Family::GridComplement { m: 4 }, 8, 3, Some(4)),
        (Family::Hamming { d: 2, q: 3 }, 9, 4, Some(3)),
        (Family::Octahedron, 6, 4, Some(3)),
        (Family::Icosahedron, 12, 5, Some(3)),
        (Family::Petersen, 10, 3, Some(5)),
        (Family::Line { of: Box::new(Family::Petersen) }, 15, 4, Some(3)),
        (Family::Hamming { d: 7, q: 2 }, 128, 7, Some(4)),
        (Family::Grid { n: 3, m: 3 }, 9, 4, Some(3)),
    ];
    for (f, n, k, g) in cases {
        let lf = build_graph(&f).unwrap();
        assert_eq!(lf.graph.order(), n, "{f}");
        assert_eq!(lf.graph.valency(), Some(k), "{f}");
        assert_eq!(girth(&lf.graph), g, "{f}");
        assert_eq!(lf.labels.len(), n);
        assert!(lf.generators.iter().all(|p| lf.graph.is_automorphism(p)), "{f}");
    }
    assert_eq!(diameter(&build_graph(&Family::Octahedron).unwrap().graph).unwrap(), 2);
}

#[test]
fn natural_groups_are_full_automorphism_groups() {
    for f in [
        Family::GridComplement { m: 5 },
        Family::Hamming { d: 2, q: 3 },
        Family::Octahedron,
        Family::Icosahedron,
        Family::Petersen,
        Family::CompleteBipartite { m: 3, n: 3 },
        Family::Cycle { n: 7 },
    ] {
        let lf = build_graph(&f).unwrap();
        let aut = automorphism_group(&lf.graph).unwrap();
        assert!(lf.group().same_group(&aut), "{f}");
    }
}

#[test]
fn vertex_labels() {
    let gc = build_graph(&Family::GridComplement { m: 4 }).unwrap();
    let u = gc.vertex(&VertexLabel::Pair(1, 1)).unwrap();
    let v = gc.vertex(&VertexLabel::Pair(2, 2)).unwrap();
    let w = gc.vertex(&VertexLabel::Pair(2, 1)).unwrap();
    assert!(gc.graph.is_adjacent(u, v));
    assert!(!gc.graph.is_adjacent(u, w));
}

#[test]
fn invalid_parameters() {
    assert!(matches!(build_graph(&Family::Cycle { n: 2 }), Err(Error::InvalidParameter(_))));
    assert!(matches!(build_graph(&Family::GridComplement { m: 1 }), Err(Error::InvalidParameter(_))));
    assert!(sym(0).is_err());
    assert!(two_homog_frobenius(5).is_err());
    assert!(two_homog_frobenius(9).is_err());
    assert!(two_transitive_not_three(7).is_err());
}

#[test]
fn group_orders() {
    assert_eq!(sym(4).unwrap().order(), 24);
    assert_eq!(alt(5).unwrap().order(), 60);
    assert_eq!(octahedral().order(), 48);
    assert_eq!(icosahedral_rotations().order(), 60);
    assert_eq!(icosahedral().order(), 120);
    assert_eq!(agl1(5).unwrap().order(), 20);
    assert_eq!(psl2_5().order(), 60);
    assert_eq!(petersen_s5().order(), 120);
    assert_eq!(wreath_grid(4).unwrap().order(), 48);
    let f21 = two_homog_frobenius(7).unwrap();
    assert_eq!((f21.degree(), f21.order()), (7, 21));
    let t = transitivity_degree_tests(&f21);
    assert!(t.two_homogeneous && !t.two_transitive);
    let f55 = two_homog_frobenius(11).unwrap();
    assert_eq!((f55.degree(), f55.order()), (11, 55));
    let h = wreath_hamming(&f21, 7).unwrap();
    assert_eq!((h.degree(), h.order()), (128, 2688));
    let spec = GroupSpec::WreathHamming { h: Box::new(GroupSpec::TwoHomogFrobenius { p: 7 }), d: 7 };
    assert!(build_group(&spec).unwrap().same_group(&h));
}

#[test]
fn icosahedral_groups_act_on_the_icosahedron() {
    let g = build_graph(&Family::Icosahedron).unwrap().graph;
    for group in [icosahedral_rotations(), icosahedral()] {
        assert!(group.generators().iter().all(|p| g.is_automorphism(p)));
        assert_eq!(group.orbit(0).unwrap().len(), 12);
    }
}

#[test]
fn line_group_of_petersen() {
    let petersen = build_graph(&Family::Petersen).unwrap().graph;
    let lg = line_group(&petersen, &petersen_s5()).unwrap();
    assert_eq!((lg.degree(), lg.order()), (15, 120));
    let line = build_graph(&Family::Line { of: Box::new(Family::Petersen) }).unwrap().graph;
    assert!(lg.generators().iter().all(|p| line.is_automorphism(p)));
}

#[test]
fn grid_condition_witnesses() {
    let orders: Vec<u128> =
        [4, 5, 6].into_iter().flat_map(|m| condition_3_1_examples(m).unwrap()).map(|g| g.order()).collect();
    assert_eq!(orders, [24, 40, 120]);
    let s2_s4 = row_swap_times(&sym(4).unwrap()).unwrap();
    assert!(!check_condition_3_1(&s2_s4, 4).unwrap().holds);
}
