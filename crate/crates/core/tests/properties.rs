mod common;

use common::*;
use proptest::prelude::*;
use strong_geodetic::checker::check;
use strong_geodetic::corpus::connected_up_to;
use strong_geodetic::verification::sweep_conjecture;
use strong_geodetic::{
    cartesian_product, from_graph6, lower_bound, sg_product_with_layer_pruning, strong_geodetic_number, to_graph6,
    CertificateJson, SolveOptions,
};

fn connected_graph(max_n: usize) -> impl Strategy<Value = (usize, Edges)> {
    (2..=max_n, any::<u64>(), 0.0..0.6f64).prop_map(|(n, seed, p)| {
        use rand::SeedableRng;
        random_connected(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip((n, e) in connected_graph(20)) {
        let g = graph(n, &e);
        let line = to_graph6(&g);
        let back = from_graph6(&line).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(to_graph6(&back), line);
    }

    #[test]
    fn solver_is_exact((n, e) in connected_graph(7)) {
        let g = graph(n, &e);
        let out = strong_geodetic_number(&g, &SolveOptions::default()).unwrap();
        let cert = out.certificate().unwrap();
        let json = cert.to_json(&g);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: CertificateJson = serde_json::from_str(&text).unwrap();
        prop_assert!(check(&parsed).is_ok());
        let o = Oracle::new(n, &e);
        prop_assert!(o.is_strong(cert.set()));
        prop_assert_eq!(cert.size(), o.sg());
        prop_assert!(lower_bound(&g) <= cert.size());
    }

    #[test]
    fn tampered_certificates_are_rejected((n, e) in connected_graph(8), pick in any::<usize>()) {
        let g = graph(n, &e);
        let cert = strong_geodetic_number(&g, &SolveOptions::default()).unwrap().certificate().unwrap().clone();
        let good = cert.to_json(&g);

        let mut dropped = good.clone();
        let i = pick % dropped.pairs.len();
        dropped.pairs.remove(i);
        prop_assert!(check(&dropped).is_err());

        let mut repeated = good.clone();
        let len = repeated.pairs.len();
        let p = &mut repeated.pairs[pick % len];
        if p.path.len() > 2 {
            // a walk that repeats a vertex is never a geodesic
            let second = p.path[1];
            p.path.insert(2, second);
            prop_assert!(check(&repeated).is_err());
        }

        let mut lying = good;
        lying.covered = !lying.covered;
        prop_assert!(check(&lying).is_err());
    }

    #[test]
    fn product_distances_add((ng, eg) in connected_graph(5), (nh, eh) in connected_graph(4)) {
        let (g, h) = (graph(ng, &eg), graph(nh, &eh));
        let pg = cartesian_product(&g, &h).unwrap();
        for a in pg.graph().vertices() {
            for b in pg.graph().vertices() {
                let ((ga, ha), (gb, hb)) = (pg.coord(a), pg.coord(b));
                prop_assert_eq!(pg.graph().dist(a, b), g.dist(ga, gb) + h.dist(ha, hb));
            }
        }
    }

    #[test]
    fn pruning_never_changes_the_value((ng, eg) in connected_graph(4), (nh, eh) in connected_graph(4)) {
        let pg = cartesian_product(&graph(ng, &eg), &graph(nh, &eh)).unwrap();
        let opts = SolveOptions::default();
        let pruned = sg_product_with_layer_pruning(&pg, &opts).unwrap();
        let plain = strong_geodetic_number(pg.graph(), &opts).unwrap();
        prop_assert_eq!(pruned.value(), plain.value());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sweep_ignores_input_order(perm in Just(connected_up_to(5)).prop_shuffle()) {
        let base = sweep_conjecture(&connected_up_to(5), &SolveOptions::default());
        let shuffled = sweep_conjecture(&perm, &SolveOptions::default());
        prop_assert_eq!(&base.counts, &shuffled.counts);
        let mut a = base.equality_catalog.clone();
        let mut b = shuffled.equality_catalog.clone();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        for r in &shuffled.records {
            prop_assert_eq!(&perm[r.line], &r.graph6);
        }
    }
}
