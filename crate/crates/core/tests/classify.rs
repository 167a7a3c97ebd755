use std::collections::HashSet;

use symclass::classify::{
    arc_orbit_count, check_condition_3_1, check_kantor_conditions, classified_corpus, classify_pair,
    classify_pair_with_budget, is_2_geodesic_transitive, is_s_arc_transitive, is_s_distance_transitive, near_misses,
    verify_all, verify_paper, Budget, Status, Table1Match, Table1Row, CLAIMS,
};
use symclass::families::{
    alt, build_graph, dihedral, icosahedral_rotations, line_group, octahedral, petersen_s5, row_swap_times, sym,
    two_homog_frobenius, wreath_bipartite, wreath_grid, Family,
};
use symclass::graph::{distance_partition, enumerate_2_geodesics, enumerate_s_arcs};
use symclass::permgroup::enumerate_subgroups;
use symclass::{Error, Graph, PermutationGroup};

fn graph(f: Family) -> Graph {
    build_graph(&f).unwrap().graph
}

fn orbit_count(tuples: &[Vec<usize>], group: &PermutationGroup) -> usize {
    let elements = group.elements();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut orbits = 0;
    for t in tuples {
        if seen.contains(t) {
            continue;
        }
        orbits += 1;
        for g in &elements {
            seen.insert(t.iter().map(|&x| g.apply(x)).collect());
        }
    }
    orbits
}

fn oracle_2dt(g: &Graph, group: &PermutationGroup) -> bool {
    if !group.is_transitive() {
        return false;
    }
    let stab = group.point_stabilizer(0).unwrap();
    let p = distance_partition(g, 0).unwrap();
    (1..=2.min(p.eccentricity())).all(|i| {
        let layer: Vec<Vec<usize>> = p.layer(i).iter().map(|&v| vec![v]).collect();
        orbit_count(&layer, &stab) == 1
    }) && p.eccentricity() >= 2
}

fn oracle_2at(g: &Graph, group: &PermutationGroup) -> bool {
    group.is_transitive() && orbit_count(&enumerate_s_arcs(g, 2).unwrap(), group) == 1
}

#[test]
fn predicates_match_orbit_oracle_over_subgroups() {
    let cases = [
        (graph(Family::GridComplement { m: 4 }), wreath_grid(4).unwrap()),
        (graph(Family::Octahedron), octahedral()),
        (graph(Family::CompleteBipartite { m: 3, n: 3 }), wreath_bipartite(3).unwrap()),
    ];
    for (g, full) in cases {
        for h in enumerate_subgroups(&full, 400).unwrap() {
            assert_eq!(is_s_distance_transitive(&g, &h, 2).unwrap().holds, oracle_2dt(&g, &h));
            assert_eq!(is_s_arc_transitive(&g, &h, 2).unwrap(), oracle_2at(&g, &h));
        }
    }
}

#[test]
fn distance_transitivity_examples() {
    assert!(is_s_distance_transitive(&graph(Family::Octahedron), &octahedral(), 2).unwrap().holds);
    assert!(!is_s_distance_transitive(&graph(Family::Complete { n: 4 }), &sym(4).unwrap(), 2).unwrap().holds);
    let gc4 = graph(Family::GridComplement { m: 4 });
    assert!(is_s_distance_transitive(&gc4, &row_swap_times(&alt(4).unwrap()).unwrap(), 2).unwrap().holds);
}

#[test]
fn arc_transitivity_examples() {
    for m in 2..=5 {
        let g = graph(Family::CompleteBipartite { m, n: m });
        assert!(is_s_arc_transitive(&g, &wreath_bipartite(m).unwrap(), 2).unwrap());
    }
    let oct = graph(Family::Octahedron);
    for h in enumerate_subgroups(&octahedral(), 400).unwrap() {
        assert!(!is_s_arc_transitive(&oct, &h, 2).unwrap());
    }
    let petersen = graph(Family::Petersen);
    assert!(is_s_arc_transitive(&petersen, &petersen_s5(), 3).unwrap());
    assert_eq!(arc_orbit_count(&petersen, &petersen_s5(), 3).unwrap(), 1);
    assert!(is_s_arc_transitive(&petersen, &petersen_s5(), 4).is_err());
}

#[test]
fn geodesic_transitivity_examples() {
    assert!(is_2_geodesic_transitive(&graph(Family::Octahedron), &octahedral()).unwrap());
    let c6 = graph(Family::Cycle { n: 6 });
    assert!(is_2_geodesic_transitive(&c6, &dihedral(6).unwrap()).unwrap());
    let petersen = graph(Family::Petersen);
    let line = graph(Family::Line { of: Box::new(Family::Petersen) });
    let lg = line_group(&petersen, &petersen_s5()).unwrap();
    assert!(is_2_geodesic_transitive(&line, &lg).unwrap());
    assert_eq!(orbit_count(&enumerate_2_geodesics(&line), &lg), 1);
    assert!(matches!(
        is_2_geodesic_transitive(&graph(Family::Complete { n: 5 }), &sym(5).unwrap()),
        Err(Error::CompleteGraph)
    ));
}

#[test]
fn grid_condition_examples() {
    assert!(check_condition_3_1(&row_swap_times(&alt(4).unwrap()).unwrap(), 4).unwrap().holds);
    let c = check_condition_3_1(&wreath_grid(4).unwrap(), 4).unwrap();
    assert!(!c.holds && c.kernel_order == 24);
    let a4 = alt(4).unwrap();
    let a4_on_rows = PermutationGroup::new(
        8,
        a4.generators()
            .iter()
            .map(|g| {
                let images = (0..8).map(|v| if v < 4 { g.apply(v) } else { 4 + g.apply(v - 4) }).collect();
                symclass::Permutation::from_images(images).unwrap()
            })
            .collect(),
    )
    .unwrap();
    let c = check_condition_3_1(&a4_on_rows, 4).unwrap();
    assert!(!c.holds);
    assert_eq!(c.row_image_order, 1);
}

#[test]
fn kantor_conditions() {
    let v = check_kantor_conditions(&two_homog_frobenius(7).unwrap());
    assert_eq!(v.status, Status::Verified);
    assert_eq!(check_kantor_conditions(&two_homog_frobenius(11).unwrap()).status, Status::Verified);
    assert_eq!(check_kantor_conditions(&sym(4).unwrap()).status, Status::Skipped);
}

#[test]
fn pair_reports() {
    let ico = graph(Family::Icosahedron);
    let r = classify_pair(&ico, &icosahedral_rotations()).unwrap();
    assert!(r.two_dt_not_two_at());
    assert_eq!(r.table1_match, Some(Table1Match::Row(Table1Row::Icosahedron)));

    let petersen = graph(Family::Petersen);
    let line = graph(Family::Line { of: Box::new(Family::Petersen) });
    let r = classify_pair(&line, &line_group(&petersen, &petersen_s5()).unwrap()).unwrap();
    assert!(r.two_dt_not_two_at());
    assert_eq!(r.second_layer_size(), 8);
    assert_eq!(r.table1_match, Some(Table1Match::Row(Table1Row::LineGraph)));

    let k44 = graph(Family::CompleteBipartite { m: 4, n: 4 });
    let r = classify_pair(&k44, &wreath_bipartite(4).unwrap()).unwrap();
    assert!(r.s_distance_transitive[1] && r.s_arc_transitive[1]);
    assert_eq!(r.table1_match, None);

    let r = classify_pair(&graph(Family::Hamming { d: 3, q: 2 }), &octahedral());
    assert!(matches!(r, Err(Error::DegreeMismatch { expected: 8, found: 6 })));
}

#[test]
fn classify_rejects_bad_inputs() {
    let oct = graph(Family::Octahedron);
    let bad =
        PermutationGroup::new(6, vec![symclass::Permutation::from_images(vec![1, 0, 2, 3, 4, 5]).unwrap()]).unwrap();
    assert!(matches!(classify_pair(&oct, &bad), Err(Error::NotAutomorphism { .. })));
    let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let g = PermutationGroup::trivial(4);
    assert!(matches!(classify_pair(&split, &g), Err(Error::Disconnected)));
    assert!(classify_pair(&Graph::empty(0), &PermutationGroup::trivial(1)).is_err());
}

#[test]
fn near_misses_match_no_row() {
    for e in near_misses().unwrap() {
        let r = classify_pair(&e.graph, &e.group).unwrap();
        assert!(!r.two_dt_not_two_at(), "{}", e.name);
        assert_eq!(r.table1_match, None, "{}", e.name);
    }
}

#[test]
fn corpus_reports_are_consistent() {
    for (e, r) in classified_corpus().unwrap() {
        assert!(r.lemma_flags.iter().all(|s| s.agrees), "{}", e.name);
        if r.two_dt_not_two_at() && r.valency <= 5 {
            assert!(matches!(r.table1_match, Some(Table1Match::Row(_))), "{}", e.name);
        }
    }
}

#[test]
fn small_budget_skips_enumeration() {
    let tight = Budget { subgroups: 10, triples: 128 };
    let v = verify_paper("L3.4", &tight).unwrap();
    assert_eq!(v.status, Status::Skipped);
    assert!(v.reason.unwrap().contains("budget"));
    let oct = graph(Family::Octahedron);
    let r = classify_pair_with_budget(&oct, &octahedral(), &Budget { subgroups: 400, triples: 0 }).unwrap();
    assert!(r.s_distance_transitive[1]);
    assert_eq!("subgroups=48,triples=7".parse::<Budget>().unwrap(), Budget { subgroups: 48, triples: 7 });
    assert!("subgroups".parse::<Budget>().is_err());
}

#[test]
fn every_claim_verifies() {
    let verdicts = verify_all(&Budget::default()).unwrap();
    assert_eq!(verdicts.iter().map(|v| v.claim.as_str()).collect::<Vec<_>>(), CLAIMS);
    for v in &verdicts {
        assert_eq!(v.status, Status::Verified, "{}: {:?}", v.claim, v.reason);
    }
    let l34 = &verdicts[3];
    assert_eq!(l34.evidence.counts["index_2_subgroups"], 3);
    assert_eq!(l34.evidence.counts["index_2_projecting_onto_s3"], 2);
    let t13 = verdicts.iter().find(|v| v.claim == "T1.3").unwrap();
    assert_eq!(t13.evidence.counts["rows"], 7);
    assert_eq!(t13.evidence.counts["matches"], 7);
    assert_eq!(t13.evidence.counts["violations"], 0);
    assert!(matches!(verify_paper("X9.9", &Budget::default()), Err(Error::UnknownClaim(_))));
}
