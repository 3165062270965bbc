mod common;

use common::{adj_of, all_partitions, graph_of, naive_invariants, random_connected, NaiveInvariants};
use domchrom::graph::complete_bipartite;
use domchrom::invariants::{
    chromatic_number, classify_dk, dk_value, dominates_class, dominated_chromatic_number,
    dominator_chromatic_number, domination_number, enumerate_optimal_dominator_colorings,
    find_coloring, invariant_report, total_domination_number, Coloring, ColoringKind,
};
use domchrom::search::enumerate_connected;
use domchrom::{Error, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn solver_values(g: &Graph) -> NaiveInvariants {
    let r = invariant_report(g).unwrap();
    assert!(r.witnesses_valid(g));
    NaiveInvariants {
        gamma: r.gamma,
        gamma_t: r.gamma_t,
        chi: r.chi,
        chi_d: r.chi_d,
        chi_dom: r.chi_dom,
    }
}

#[test]
fn solvers_match_exhaustive_search_up_to_five() {
    for n in 1..=5 {
        for g in enumerate_connected(n).unwrap() {
            assert_eq!(solver_values(&g), naive_invariants(&adj_of(&g)), "{g:?}");
        }
    }
}

#[test]
fn solvers_match_exhaustive_search_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..120 {
        let adj = random_connected(&mut rng, 6 + i % 2);
        let g = graph_of(&adj);
        assert_eq!(solver_values(&g), naive_invariants(&adj), "{g:?}");
    }
}

#[test]
fn dominator_coloring_enumeration_matches_partitions() {
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let adj = adj_of(&g);
            let (chi_d, _) = dominator_chromatic_number(&g).unwrap();
            let mut got: Vec<Coloring> = enumerate_optimal_dominator_colorings(&g, chi_d)
                .unwrap()
                .into_iter()
                .map(|c| c.canonical())
                .collect();
            got.sort_by(|a, b| a.classes().cmp(b.classes()));
            let mut want: Vec<Vec<Vec<usize>>> = all_partitions(n)
                .into_iter()
                .filter(|p| p.len() == chi_d && common::dominator(&adj, p))
                .collect();
            want.sort();
            let got: Vec<Vec<Vec<usize>>> = got.iter().map(|c| c.classes().to_vec()).collect();
            assert_eq!(got, want, "{g:?}");
        }
    }
}

#[test]
fn spec_examples() {
    let p4 = Graph::path(4);
    assert_eq!(dominator_chromatic_number(&p4).unwrap().0, 3);
    let k23 = complete_bipartite(2, 3).unwrap().0;
    assert_eq!(dominated_chromatic_number(&k23).unwrap().0, 2);
    assert_eq!(total_domination_number(&complete_bipartite(1, 4).unwrap().0).unwrap().0, 2);
    let (dk, r) = classify_dk(&complete_bipartite(2, 2).unwrap().0).unwrap();
    assert_eq!((dk, r.gamma, r.chi, r.chi_d), (Some(2), 2, 2, 2));
    assert_eq!(classify_dk(&complete_bipartite(1, 3).unwrap().0).unwrap().0, None);
    let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(classify_dk(&two).unwrap_err(), Error::Disconnected);
    assert_eq!(domination_number(&Graph::empty(0)).unwrap_err(), Error::EmptyGraph);
}

#[test]
fn dominates_class_convention() {
    let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
    let c = Coloring::new(vec![vec![0], vec![1], vec![2]], 3).unwrap();
    assert!(dominates_class(&g, 2, &c, 2).unwrap());
    assert!(dominates_class(&g, 0, &c, 1).unwrap());
    assert!(!dominates_class(&g, 0, &c, 2).unwrap());
    assert!(dominates_class(&g, 0, &c, 3).is_err());
}

fn arb_connected() -> impl Strategy<Value = Graph> {
    (2usize..=7, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        graph_of(&random_connected(&mut rng, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich_and_witnesses(g in arb_connected()) {
        let r = invariant_report(&g).unwrap();
        prop_assert!(r.sandwich_holds());
        prop_assert!(r.witnesses_valid(&g));
        prop_assert!(r.gamma <= r.chi_d);
        prop_assert_eq!(dk_value(&g).unwrap(), r.dk);
    }

    #[test]
    fn witness_is_least_color_vector(g in arb_connected()) {
        let (chi, c) = chromatic_number(&g).unwrap();
        let n = g.order();
        let adj = adj_of(&g);
        let least = all_partitions(n)
            .into_iter()
            .filter(|p| p.len() == chi && common::proper(&adj, p))
            .map(|p| Coloring::new(p, n).unwrap().colors())
            .min()
            .unwrap();
        prop_assert_eq!(c.colors(), least);
        let again = find_coloring(&g, ColoringKind::Proper, chi).unwrap().unwrap();
        prop_assert_eq!(again, c);
    }
}
