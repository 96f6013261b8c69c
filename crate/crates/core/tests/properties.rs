mod common;

use dimkit::graphs::{
    intersect_graphs, is_interval, is_split, is_threshold, normalize_interval_rep, recognize_interval,
    recognize_split, recognize_threshold, recognize_unit_interval, union_edges, SplitVerdict,
};
use dimkit::io;
use dimkit::posets::{characteristic_poset, is_realizer, poset_dimension, poset_from_relation};
use dimkit::reductions::{
    interval_reps_from_cover, poset_to_split_graph, realizer_from_threshold_cover, split_to_gprime,
    threshold_graphs_from_realizer, two_threshold_cover,
};
use dimkit::solvers::{boxicity, cubicity, threshold_dimension, threshold_intersection_number};
use dimkit::verify::{check_cover, check_intersection, gen_random_split, gen_random_split_interval, no_containment};
use dimkit::{Graph, Poset, SearchConfig};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| {
        (proptest::collection::vec(any::<bool>(), n * (n - 1) / 2), labels(n)).prop_map(
            move |(bits, perm)| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .zip(bits)
                    .filter_map(|((u, v), b)| b.then_some((perm[u], perm[v])))
                    .collect();
                poset_from_relation(n, &pairs).unwrap()
            },
        )
    })
}

fn labels(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn split_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, d, seed)| gen_random_split(n, d, seed).unwrap().0)
}

fn cfg() -> SearchConfig {
    SearchConfig::graphs().with_max_n(16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn graph_text_round_trips(g in graph(12)) {
        prop_assert_eq!(io::parse_graph(&io::write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn poset_text_round_trips(p in poset(8)) {
        prop_assert_eq!(io::parse_poset(&io::write_poset(&p)).unwrap(), p);
    }

    #[test]
    fn recognizers_match_oracles(g in graph(7)) {
        prop_assert_eq!(is_interval(&g), common::interval(&g));
        prop_assert_eq!(is_threshold(&g), common::threshold(&g));
        prop_assert_eq!(recognize_unit_interval(&g).unwrap().is_some(), common::unit_interval(&g));
    }

    #[test]
    fn recognizer_certificates_are_valid(g in graph(8)) {
        match recognize_split(&g).unwrap() {
            SplitVerdict::Split(p) => {
                prop_assert!(p.validate(&g).is_ok());
                prop_assert!(g.is_clique(p.clique_mask()));
                prop_assert!(g.is_independent(p.independent_mask()));
            }
            SplitVerdict::NotSplit(obs) => {
                let h = g.induced_subgraph(&obs.vertices).unwrap();
                prop_assert!(!is_split(&h));
            }
        }
        if let Some(rep) = recognize_interval(&g).unwrap() {
            prop_assert!(rep.realizes(&g));
            prop_assert_eq!(normalize_interval_rep(&rep).graph(), g.clone());
        }
        if let Some(rep) = recognize_unit_interval(&g).unwrap() {
            prop_assert!(rep.realizes(&g));
        }
        if let Some(order) = recognize_threshold(&g).unwrap() {
            let mut seen = order.clone();
            seen.sort_unstable();
            prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn recognizers_ignore_labels((g, perm) in graph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), labels(n)) })) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(is_split(&g), is_split(&h));
        prop_assert_eq!(is_threshold(&g), is_threshold(&h));
        prop_assert_eq!(is_interval(&g), is_interval(&h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tdim_matches_brute_force(g in graph(5)) {
        let (k, cover) = threshold_dimension(&g, &cfg()).unwrap();
        prop_assert_eq!(k, common::tdim(&g));
        prop_assert_eq!(cover.0.len(), k);
        prop_assert!(check_cover(&g, &cover));
        prop_assert!(no_containment(&cover.0));
    }

    #[test]
    fn boxicity_and_cubicity_match_brute_force(g in graph(5)) {
        let (b, brep) = boxicity(&g, &cfg()).unwrap();
        let (c, crep) = cubicity(&g, &cfg()).unwrap();
        prop_assert_eq!(b, common::boxicity(&g));
        prop_assert_eq!(c, common::cubicity(&g));
        prop_assert!(check_intersection(&g, &brep));
        prop_assert!(check_intersection(&g, &crep));
        prop_assert!(b <= c);
    }

    #[test]
    fn tint_is_tdim_of_complement(g in graph(7)) {
        let (t, rep) = threshold_intersection_number(&g, &cfg()).unwrap();
        let (d, _) = threshold_dimension(&g.complement(), &cfg()).unwrap();
        prop_assert_eq!(t, d.max(1));
        prop_assert!(check_intersection(&g, &rep));
    }

    #[test]
    fn dimensions_ignore_labels((g, perm) in graph(6).prop_flat_map(|g| { let n = g.n(); (Just(g), labels(n)) })) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(threshold_dimension(&g, &cfg()).unwrap().0, threshold_dimension(&h, &cfg()).unwrap().0);
        prop_assert_eq!(boxicity(&g, &cfg()).unwrap().0, boxicity(&h, &cfg()).unwrap().0);
    }

    #[test]
    fn poset_dimension_matches_brute_force(p in poset(5)) {
        let (d, r) = poset_dimension(&p, &SearchConfig::posets()).unwrap();
        prop_assert_eq!(d, common::poset_dim(&p));
        prop_assert_eq!(r.len(), d);
        prop_assert!(is_realizer(&p, &r));
    }

    #[test]
    fn poset_dimension_is_monotone(p in poset(5)) {
        let cfg = SearchConfig::posets();
        let d = poset_dimension(&p, &cfg).unwrap().0;
        for x in 0..p.n() {
            let rest: Vec<usize> = (0..p.n()).filter(|&y| y != x).collect();
            if rest.is_empty() {
                continue;
            }
            let q = p.restrict(&rest).unwrap();
            prop_assert!(poset_dimension(&q, &cfg).unwrap().0 <= d);
        }
    }

    #[test]
    fn poset_graph_round_trip(p in poset(6)) {
        let gp = poset_to_split_graph(&p).unwrap();
        prop_assert!(gp.partition.validate(&gp.graph).is_ok());
        let cp = characteristic_poset(&gp.graph, &gp.partition).unwrap();
        prop_assert_eq!(cp.poset, p.clone());
        let (_, r) = poset_dimension(&p, &SearchConfig::posets()).unwrap();
        let rep = threshold_graphs_from_realizer(&p, &r).unwrap();
        prop_assert!(check_intersection(&gp.graph, &rep));
        prop_assert_eq!(rep.factors.len(), r.len());
    }

    #[test]
    fn threshold_factors_give_a_realizer(g in split_graph(7)) {
        let part = recognize_split(&g).unwrap().partition().unwrap();
        let (t, rep) = threshold_intersection_number(&g, &cfg()).unwrap();
        let r = realizer_from_threshold_cover(&g, &part, &rep).unwrap();
        let cp = characteristic_poset(&g, &part).unwrap();
        prop_assert_eq!(r.len(), t);
        prop_assert!(is_realizer(&cp.poset, &r));
    }

    #[test]
    fn split_interval_needs_two_threshold_factors(n in 1usize..=9, seed in any::<u64>()) {
        let (g, part) = gen_random_split_interval(n, seed).unwrap();
        prop_assert!(is_interval(&g));
        let rep = recognize_interval(&g).unwrap().unwrap();
        let (g1, g2) = two_threshold_cover(&g, &part, &rep).unwrap();
        prop_assert!(is_threshold(&g1) && is_threshold(&g2));
        prop_assert_eq!(intersect_graphs(&[g1, g2]).unwrap(), g.clone());
        prop_assert!(threshold_dimension(&g.complement(), &cfg()).unwrap().0 <= 2);
    }

    #[test]
    fn gprime_factors_intersect_to_gprime(h in split_graph(5)) {
        let gp = split_to_gprime(&h).unwrap();
        prop_assert!(gp.partition.validate(&gp.graph).is_ok());
        if gp.trivial_case {
            prop_assert_eq!(gp.graph, h);
        } else {
            prop_assert_eq!(gp.graph.n(), 2 * h.n());
            let (t, cover) = threshold_dimension(&h, &cfg()).unwrap();
            let reps = interval_reps_from_cover(&h, &cover).unwrap();
            prop_assert_eq!(reps.len(), t);
            let factors: Vec<Graph> = reps.iter().map(|(f, _)| f.clone()).collect();
            prop_assert!(factors.iter().all(is_interval));
            prop_assert_eq!(intersect_graphs(&factors).unwrap(), gp.graph.clone());
            prop_assert_eq!(boxicity(&gp.graph, &cfg()).unwrap().0, t);
            prop_assert_eq!(union_edges(&cover.0).unwrap(), h);
        }
    }

    #[test]
    fn generators_are_deterministic(n in 1usize..=10, d in 0.0f64..=1.0, seed in any::<u64>()) {
        prop_assert_eq!(gen_random_split(n, d, seed).unwrap(), gen_random_split(n, d, seed).unwrap());
        prop_assert_eq!(gen_random_split_interval(n, seed).unwrap(), gen_random_split_interval(n, seed).unwrap());
    }
}
