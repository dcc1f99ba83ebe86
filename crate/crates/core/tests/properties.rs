use kpath::bounds::{pair_step, pair_step_general, FeasiblePair};
use kpath::chordal::{chordal_color, clique_number, clique_tree, is_chordal, nice_decomposition};
use kpath::construct::{cover_random_order, lovasz_partition, order_weight};
use kpath::exact::psi_exact;
use kpath::graph::{generate_family, parse_auto, parse_graph6, write_graph, write_graph6, FamilySpec};
use kpath::paths::{find_path_of_order, is_cover};
use kpath::verify::{erdos_gallai_holds, harness_methods};
use kpath::{int, ratio, Error, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn chordal_graph() -> impl Strategy<Value = Graph> {
    (prop_oneof![Just("ktree"), Just("interval")], 2usize..=30, 1usize..=5, any::<u64>()).prop_map(
        |(kind, n, p, seed)| {
            let spec = if kind == "ktree" {
                FamilySpec::KTree { n: n.max(p + 1), width: p }
            } else {
                FamilySpec::Interval { n, max_len: 2 * p }
            };
            generate_family(&spec, seed).unwrap()
        },
    )
}

fn skip(e: &Error) -> bool {
    matches!(
        e,
        Error::Precondition(_)
            | Error::InvalidK { .. }
            | Error::NotChordal
            | Error::NotAForest
            | Error::CapExceeded { .. }
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn every_algorithm_returns_a_cover(g in graph(10), k in 2usize..=6, seed in any::<u64>()) {
        for method in harness_methods(seed) {
            match method.run(&g, k) {
                Ok(r) => {
                    prop_assert!(is_cover(&g, k, &r.cover).unwrap().is_valid());
                    prop_assert!(!r.guarantee_certified || r.meets_guarantee(), "{} {} > {}", method, r.size(), r.guarantee_value);
                }
                Err(e) => prop_assert!(skip(&e), "{method}: {e}"),
            }
        }
    }

    #[test]
    fn lovasz_caps_and_potential(g in graph(12), split in 0usize..=6) {
        let d = g.max_degree();
        let a = split.min(d);
        let b = d.saturating_sub(a + 1);
        let p = lovasz_partition(&g, a, b).unwrap();
        prop_assert!(g.induced(&p.a_side).max_degree() <= a);
        prop_assert!(g.induced(&p.b_side).max_degree() <= b);
        prop_assert!(p.potentials.windows(2).all(|w| w[1] < w[0]));
        prop_assert!(p.moves as u64 <= (b as u64 + 1) * g.m() as u64);
        prop_assert_eq!(p.a_side.len() + p.b_side.len(), g.n());
    }

    #[test]
    fn positive_weight_vertices_induce_a_forest(g in graph(12), perm in any::<u64>(), k in 3usize..=6) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm));
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let earlier: Vec<usize> = (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&w| pos[w] < pos[v]).count()).collect();
        let y: Vec<usize> = (0..g.n()).filter(|&v| earlier[v] <= 1).collect();
        let f = g.induced(&y);
        prop_assert!(f.is_forest());
        for comp in f.components() {
            prop_assert!(comp.iter().filter(|&&i| earlier[y[i]] == 0).count() <= 1);
        }
        let first = earlier.iter().filter(|&&c| c == 0).count() as i64;
        let second = earlier.iter().filter(|&&c| c == 1).count() as i64;
        prop_assert_eq!(order_weight(&g, k, &order), int(first) + ratio(second * (k as i64 - 2), k as i64 - 1));
    }

    #[test]
    fn random_order_cover_is_valid(g in graph(10), k in 3usize..=5, seed in any::<u64>()) {
        prop_assume!(!g.has_isolated_vertex());
        let r = cover_random_order(&g, k, seed, 50).unwrap();
        prop_assert!(is_cover(&g, k, &r.cover).unwrap().is_valid());
        prop_assert!(!r.guarantee_certified || r.meets_guarantee());
    }

    #[test]
    fn general_step_with_tight_q_is_the_basic_step(an in 0i64..40, bn in 1i64..40, x in 1usize..30) {
        let base = FeasiblePair::new(3, ratio(an, 60), ratio(bn, 60), "random").unwrap();
        let Ok(basic) = pair_step(&base, x) else { return Ok(()) };
        let q = basic.provenance[0].q.clone();
        prop_assume!(q > int(0));
        if let Ok(general) = pair_step_general(&base, &q, &(int(2) * &q), x) {
            prop_assert!(general.same_values(&basic));
        } else {
            // only the a' < 1 boundary may reject the tight choice
            prop_assert_eq!(basic.a, int(1));
        }
    }

    #[test]
    fn chordal_structure(g in chordal_graph()) {
        prop_assert!(is_chordal(&g));
        let omega = clique_number(&g).unwrap();
        let colours = chordal_color(&g).unwrap();
        prop_assert_eq!(colours.iter().map(|&c| c + 1).max().unwrap_or(0), omega);
        for (u, v) in g.edges() {
            prop_assert_ne!(colours[u], colours[v]);
        }
        let ct = clique_tree(&g).unwrap();
        prop_assert!(ct.is_tree() && ct.has_running_intersection(g.n()));
        let nd = nice_decomposition(&ct).unwrap();
        prop_assert!(nd.validate(&g).is_ok());
        prop_assert!(nd.width() <= omega);
    }

    #[test]
    fn text_formats_round_trip(g in graph(14)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_auto(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn psi_is_monotone_in_k(g in graph(9)) {
        let psis: Vec<usize> = (2..=6).map(|k| psi_exact(&g, k).unwrap().size()).collect();
        prop_assert!(psis.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn path_free_graphs_are_sparse(g in graph(10), k in 2usize..=6) {
        prop_assume!(find_path_of_order(&g, k).unwrap().is_none());
        prop_assert_eq!(erdos_gallai_holds(&g, k).unwrap(), Some(true));
    }
}
