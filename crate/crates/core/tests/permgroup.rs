use std::collections::{HashSet, VecDeque};

use proptest::prelude::*;
use symclass::families::{alt, cyclic, octahedral, sym, two_homog_frobenius, two_subsets, wreath_grid, wreath_hamming};
use symclass::permgroup::{
    enumerate_subgroups, find_block_systems, induced_action, is_primitive, kernel_of_action, parse_generator_file,
    restrict, transitivity_degree_tests, write_generator_file,
};
use symclass::{Error, Permutation, PermutationGroup, Tristate};

fn perm(images: &[usize]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

fn closure(gens: &[Permutation], degree: usize) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[test]
fn composition_is_left_to_right() {
    let a = perm(&[1, 0, 2]);
    let b = perm(&[0, 2, 1]);
    assert_eq!(a.then(&b), perm(&[2, 0, 1]));
    assert_eq!(a.then(&a.inverse()), Permutation::identity(3));
    assert_eq!(Permutation::identity(3).then(&b), b);
}

#[test]
fn cycle_strings_are_one_indexed() {
    let p = Permutation::parse_cycles(5, "(1 2)(3 4 5)").unwrap();
    assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
    assert_eq!(p.to_cycle_string(), "(1 2)(3 4 5)");
    assert_eq!(p.order(), 6);
    assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
    assert!(Permutation::parse_cycles(3, "(1 2 1)").is_err());
}

#[test]
fn rejects_non_bijections() {
    assert!(matches!(Permutation::from_images(vec![0, 0, 1]), Err(Error::NotBijective(_))));
    assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
}

#[test]
fn orbits() {
    let trivial = PermutationGroup::trivial(5);
    assert_eq!(trivial.orbit(0).unwrap(), vec![0]);
    let c6 = cyclic(6).unwrap();
    assert_eq!(c6.orbit(2).unwrap(), (0..6).collect::<Vec<_>>());
    assert!(matches!(c6.orbit(6), Err(Error::PointOutOfRange { .. })));
}

#[test]
fn orders() {
    assert_eq!(sym(4).unwrap().order(), 24);
    assert_eq!(octahedral().order(), 48);
    let f21 = PermutationGroup::new(7, vec![perm(&[1, 2, 3, 4, 5, 6, 0]), perm(&[0, 2, 4, 6, 1, 3, 5])]).unwrap();
    assert_eq!(f21.order(), 21);
    assert_eq!(closure(f21.generators(), 7).len(), 21);
    assert!(f21.same_group(&two_homog_frobenius(7).unwrap()));
}

#[test]
fn stabilizers() {
    let s4 = sym(4).unwrap();
    let st = s4.point_stabilizer(0).unwrap();
    assert_eq!(st.order(), 6);
    assert!(st.generators().iter().all(|g| g.apply(0) == 0));

    let oct = octahedral();
    let ou = oct.point_stabilizer(0).unwrap();
    assert_eq!(ou.order(), 8);
    assert!(restrict(&ou, &[1, 2, 4, 5]).unwrap().is_transitive());

    let h = wreath_hamming(&two_homog_frobenius(7).unwrap(), 7).unwrap();
    assert_eq!(h.degree(), 128);
    assert_eq!(h.order(), 2688);
    assert_eq!(h.point_stabilizer(0).unwrap().order(), 21);
}

#[test]
fn induced_actions_and_kernels() {
    let g = wreath_grid(4).unwrap();
    let rows = vec![(0..4).collect::<Vec<_>>(), (4..8).collect()];
    assert_eq!(induced_action(&g, &rows).unwrap().image.order(), 2);
    assert_eq!(kernel_of_action(&g, &rows).unwrap().order(), 24);

    let singletons: Vec<Vec<usize>> = (0..8).map(|i| vec![i]).collect();
    assert_eq!(induced_action(&g, &singletons).unwrap().image.order(), 48);
    let whole = vec![(0..8).collect::<Vec<_>>()];
    assert_eq!(kernel_of_action(&g, &whole).unwrap().order(), 48);

    let oct = octahedral();
    let pairs: Vec<Vec<usize>> = (0..3).map(|i| vec![i, i + 3]).collect();
    assert_eq!(induced_action(&oct, &pairs).unwrap().image.order(), 6);
    assert_eq!(kernel_of_action(&oct, &pairs).unwrap().order(), 8);

    let local = restrict(&oct.point_stabilizer(0).unwrap(), &[1, 2, 4, 5]).unwrap();
    assert_eq!(local.order(), 8);
    let t = transitivity_degree_tests(&local);
    assert!(t.transitive && !t.two_transitive);
    assert_eq!(t.ordered_pair_orbits, 2);

    let c4 = cyclic(4).unwrap();
    assert!(matches!(induced_action(&c4, &[vec![0, 1], vec![2, 3]]), Err(Error::NotInvariant(_))));
}

#[test]
fn transitivity_flags() {
    let t = transitivity_degree_tests(&sym(4).unwrap());
    assert!(t.transitive && t.two_homogeneous && t.two_transitive);
    assert_eq!(t.three_transitive, Tristate::Yes);

    let t = transitivity_degree_tests(&alt(4).unwrap());
    assert!(t.transitive && t.two_homogeneous && t.two_transitive);
    assert_eq!(t.three_transitive, Tristate::No);

    let t = transitivity_degree_tests(&two_homog_frobenius(7).unwrap());
    assert!(t.two_homogeneous && !t.two_transitive);
    assert_eq!(t.unordered_pair_orbits, 1);
    assert_eq!(t.ordered_pair_orbits, 2);
}

#[test]
fn block_systems() {
    let c4 = cyclic(4).unwrap();
    let systems = find_block_systems(&c4).unwrap();
    assert!(systems.iter().any(|b| b.blocks == vec![vec![0, 2], vec![1, 3]]));
    assert!(!is_primitive(&c4).unwrap());

    let pairs = two_subsets(5);
    let a5 = alt(5).unwrap();
    let gens: Vec<Permutation> = a5
        .generators()
        .iter()
        .map(|g| {
            let images = pairs
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (g.apply(a), g.apply(b));
                    pairs.iter().position(|&p| p == (x.min(y), x.max(y))).unwrap()
                })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect();
    let on_pairs = PermutationGroup::new(10, gens).unwrap();
    assert_eq!(on_pairs.order(), 60);
    assert!(is_primitive(&on_pairs).unwrap());
    assert!(!transitivity_degree_tests(&on_pairs).two_transitive);

    let oct = octahedral();
    let antipodal = vec![vec![0, 3], vec![1, 4], vec![2, 5]];
    assert!(find_block_systems(&oct).unwrap().iter().any(|b| b.blocks == antipodal));
}

#[test]
fn subgroup_enumeration() {
    let trivial = PermutationGroup::trivial(3);
    let subs = enumerate_subgroups(&trivial, 400).unwrap();
    assert_eq!(subs.len(), 1);

    let mut orders: Vec<u128> = enumerate_subgroups(&sym(3).unwrap(), 400).unwrap().iter().map(|h| h.order()).collect();
    orders.sort_unstable();
    assert_eq!(orders, [1, 2, 2, 2, 3, 6]);

    let subs = enumerate_subgroups(&octahedral(), 400).unwrap();
    assert_eq!(subs.len(), 98);
    assert_eq!(subs.iter().filter(|h| h.order() == 24).count(), 3);
    assert_eq!(enumerate_subgroups(&alt(5).unwrap(), 400).unwrap().len(), 59);
    assert_eq!(enumerate_subgroups(&sym(5).unwrap(), 400).unwrap().len(), 156);

    assert!(matches!(enumerate_subgroups(&sym(6).unwrap(), 400), Err(Error::GroupTooLarge { order: 720, cap: 400 })));
}

#[test]
fn generator_files() {
    let g = parse_generator_file("# octahedron\ndegree 6\n\n(1 2)\n(1 3 5)(2 4 6)\n").unwrap();
    assert_eq!(g.degree(), 6);
    assert_eq!(g.order(), 24);
    let back = parse_generator_file(&write_generator_file(&octahedral())).unwrap();
    assert!(back.same_group(&octahedral()));
    assert!(parse_generator_file("(1 2)\n").is_err());
    assert!(parse_generator_file("degree 3\n(1 5)\n").is_err());
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_group() -> impl Strategy<Value = PermutationGroup> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec(arb_perm(n), 1..=3).prop_map(move |gens| PermutationGroup::new(n, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(n in 1usize..9, seed in any::<u64>()) {
        let mut state = seed;
        let mut next = || {
            let mut v: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (state >> 33) as usize % (i + 1));
            }
            Permutation::from_images(v).unwrap()
        };
        let (a, b, c) = (next(), next(), next());
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn cycle_string_round_trip(p in (1usize..10).prop_flat_map(arb_perm)) {
        let parsed = Permutation::parse_cycles(p.degree(), &p.to_cycle_string()).unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn orbit_stabilizer(g in arb_group()) {
        for x in 0..g.degree() {
            let orbit = g.orbit(x).unwrap().len() as u128;
            prop_assert_eq!(orbit * g.point_stabilizer(x).unwrap().order(), g.order());
        }
    }

    #[test]
    fn chain_matches_closure(g in arb_group()) {
        let elements = closure(g.generators(), g.degree());
        prop_assert_eq!(elements.len() as u128, g.order());
        prop_assert!(elements.iter().all(|e| g.contains(e)));
    }

    #[test]
    fn orbits_partition_points(g in arb_group()) {
        let mut points: Vec<usize> = g.orbits().concat();
        points.sort_unstable();
        prop_assert_eq!(points, (0..g.degree()).collect::<Vec<_>>());
    }

    #[test]
    fn transitivity_flags_are_monotone(g in arb_group()) {
        let t = transitivity_degree_tests(&g);
        prop_assert!(!t.two_transitive || t.two_homogeneous);
        prop_assert!(!t.two_homogeneous || t.transitive || g.degree() < 3);
        prop_assert!(t.three_transitive != Tristate::Yes || t.two_transitive);
    }
}
