use itertools::Itertools;
use mcover::families::{
    gen_projective_plane, gen_random, gen_random_partite, gen_star, gen_tripartite_7cycle, join,
    join_fractional_matching, GenSpec,
};
use mcover::hypercore::derive;
use mcover::intsolve::{nu_int, tau_int};
use mcover::ratlp::tau_star;
use mcover::{rat, Limits};

#[test]
fn star_formulas() {
    let l = Limits::default();
    for n in [4usize, 6, 8] {
        let h = gen_star(n).unwrap();
        assert_eq!(h.edge_count(), (n - 1) * (n - 2) / 2);
        let tau = tau_int(&h, 2, &l).unwrap().0;
        let nu = nu_int(&h, 2, &l).unwrap().0;
        let ts = tau_star(&h, 2, &l).unwrap().value;
        assert_eq!(tau, n - 2);
        assert_eq!(nu, (n - 2) / 2);
        assert_eq!(ts, rat(n as i64 - 1, 2));
    }
    let h = gen_star(8).unwrap();
    let ratio = rat(tau_int(&h, 2, &l).unwrap().0 as i64, 1) / tau_star(&h, 2, &l).unwrap().value;
    assert_eq!(ratio, rat(12, 7));
}

#[test]
fn plane_axioms_exhaustive() {
    for q in [2usize, 3, 5] {
        let p = gen_projective_plane(q).unwrap().hypergraph;
        for (a, b) in p.vertices().iter().tuple_combinations() {
            assert_eq!(p.edges().iter().filter(|e| e.contains(a) && e.contains(b)).count(), 1);
        }
        for (e, f) in p.edges().iter().tuple_combinations() {
            assert_eq!(e.intersection_len(f), 1);
        }
    }
}

#[test]
fn join_of_planes_is_two_intersecting() {
    let l = Limits::default();
    let fano = gen_projective_plane(2).unwrap().hypergraph;
    let j = join(&[fano.clone(), fano]).unwrap();
    assert_eq!(nu_int(&j.hypergraph, 2, &l).unwrap().0, 1);
    let w = join_fractional_matching(&j).unwrap();
    assert_eq!(w.total(), rat(49, 9));
    assert!(w.is_fractional_matching(&derive(&j.hypergraph, 2).unwrap()));
}

#[test]
fn cycle7_derived_system_is_a_cycle() {
    let (h, _) = gen_tripartite_7cycle();
    let d = derive(&h, 2).unwrap();
    let adj = d.block_adjacency();
    assert!(adj.iter().all(|n| n.len() == 2));
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    while let Some(b) = stack.pop() {
        if !std::mem::replace(&mut seen[b], true) {
            stack.extend(adj[b].iter().copied());
        }
    }
    assert!(seen.iter().all(|&s| s));
}

#[test]
fn random_families_reproducible() {
    assert_eq!(gen_random(3, 7, 10, 1).unwrap(), gen_random(3, 7, 10, 1).unwrap());
    let (a, pa) = gen_random_partite(&[2, 3, 2], 7, 3).unwrap();
    let (b, _) = gen_random_partite(&[2, 3, 2], 7, 3).unwrap();
    assert_eq!(a, b);
    pa.validate(&a).unwrap();
    let spec = GenSpec::parse("random edges=10 k=3 n=7 seed=1").unwrap();
    assert_eq!(spec.generate().unwrap().hypergraph, gen_random(3, 7, 10, 1).unwrap());
}
