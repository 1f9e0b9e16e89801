use mcover::families::{gen_random, gen_random_bipartite, gen_random_partite};
use mcover::hypercore::{derive, is_m_cover, is_m_matching};
use mcover::intsolve::{bip_matching_cover, min_z_value, nu_int, p_factor_max, tau_int};
use mcover::proofcraft::{family_nu2, family_tau2, to_family};
use mcover::ratlp::{check_slackness, nu_star, tau_star};
use mcover::{rat_int, Edge, Hypergraph, Instance, Limits, WeightFn, WeightKind};
use proptest::prelude::*;

fn l() -> Limits {
    Limits::default()
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, 0usize..=3, 1usize..=10, any::<u64>()).prop_map(|(k, extra, edges, seed)| {
        let n = k + 1 + extra;
        let available = (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
        gen_random(k, n, edges.min(available), seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn integral_and_fractional_sandwich(h in hypergraph(), m_off in 0usize..2) {
        let m = (h.uniformity() - m_off).max(1);
        let (tau, cover, _) = tau_int(&h, m, &l()).unwrap();
        let (nu, matching, _) = nu_int(&h, m, &l()).unwrap();
        prop_assert!(is_m_cover(&h, &cover.msets, m).unwrap());
        prop_assert!(is_m_matching(&h, &matching.edges, m).unwrap());
        let ts = tau_star(&h, m, &l()).unwrap();
        let ns = nu_star(&h, m, &l()).unwrap();
        prop_assert_eq!(&ts.value, &ns.value);
        prop_assert!(rat_int(nu as i64) <= ns.value);
        prop_assert!(ts.value <= rat_int(tau as i64));
        let d = derive(&h, m).unwrap();
        prop_assert!(check_slackness(&ts.cover, &ts.matching, &d).unwrap());
    }

    #[test]
    fn text_format_round_trip(h in hypergraph()) {
        let inst = Instance::plain(h.clone());
        let back = Instance::parse(&inst.to_text(&["note".to_string()])).unwrap();
        prop_assert_eq!(back.hypergraph.edges(), h.edges());
        prop_assert_eq!(back.hypergraph.uniformity(), h.uniformity());
    }

    #[test]
    fn weight_text_round_trip(h in hypergraph()) {
        let opt = tau_star(&h, 1, &l()).unwrap();
        let back = WeightFn::parse(WeightKind::Cover, 1, &opt.cover.to_text()).unwrap();
        prop_assert_eq!(back.total(), opt.cover.total());
    }

    #[test]
    fn konig_and_p_factors(left in 1usize..5, right in 1usize..5, edges in 0usize..10, seed in any::<u64>(), p in 1usize..4) {
        let edges = edges.min(left * right);
        let g = gen_random_bipartite(left, right, edges, seed).unwrap();
        let r = bip_matching_cover(&g).unwrap();
        prop_assert_eq!(r.matching.len(), r.cover.len());
        prop_assert!(g.edges().iter().all(|(a, b)| r.cover.contains(a) || r.cover.contains(b)));
        let f = p_factor_max(&g, p).unwrap();
        prop_assert_eq!(f.len(), min_z_value(&g, p, &l()).unwrap().0);
    }

    #[test]
    fn family_model_matches_hypergraph(sizes in prop::collection::vec(1usize..=3, 3), edges in 1usize..8, seed in any::<u64>()) {
        let total: usize = sizes.iter().product();
        let (h, p) = gen_random_partite(&sizes, edges.min(total), seed).unwrap();
        let f = to_family(&h, &p, 0).unwrap();
        prop_assert_eq!(family_nu2(&f, &l()).unwrap().0, nu_int(&h, 2, &l()).unwrap().0);
        prop_assert_eq!(family_tau2(&f, &l()).unwrap().0, tau_int(&h, 2, &l()).unwrap().0);
    }

    #[test]
    fn edges_are_canonical(toks in prop::collection::btree_set(0u32..50, 1..6)) {
        let mut rev: Vec<String> = toks.iter().map(u32::to_string).collect();
        rev.reverse();
        let e = Edge::new(rev.iter().map(String::as_str)).unwrap();
        prop_assert_eq!(e.len(), toks.len());
        prop_assert!(e.vertices().windows(2).all(|w| w[0] < w[1]));
    }
}
