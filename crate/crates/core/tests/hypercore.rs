use std::collections::BTreeSet;

use mcover::families::{gen_projective_plane, gen_star};
use mcover::hypercore::{
    contains_copy, derive, derived_max_degree, is_embedding, is_linear, is_m_cover, is_m_matching, textfmt,
    triangle_hypergraph,
};
use mcover::{Edge, Error, Hypergraph, Limits, SimpleGraph};

fn hg(lines: &[&str]) -> Hypergraph {
    Hypergraph::parse_edges(lines).unwrap()
}

fn edges(spec: &[&str]) -> Vec<Edge> {
    spec.iter().map(|s| Edge::parse(s).unwrap()).collect()
}

#[test]
fn derive_two_triples() {
    let d = derive(&hg(&["1 2 3", "1 4 5"]), 2).unwrap();
    assert_eq!(d.ground(), edges(&["1 2", "1 3", "1 4", "1 5", "2 3", "4 5"]).as_slice());
    assert_eq!(d.blocks().len(), 2);
    let block_sets: Vec<Vec<&Edge>> = d.blocks().iter().map(|b| b.iter().map(|&g| &d.ground()[g]).collect()).collect();
    assert_eq!(block_sets[0], edges(&["1 2", "1 3", "2 3"]).iter().collect::<Vec<_>>());
    assert_eq!(block_sets[1], edges(&["1 4", "1 5", "4 5"]).iter().collect::<Vec<_>>());
}

#[test]
fn derive_identity_and_star() {
    let d = derive(&hg(&["1 2 3"]), 3).unwrap();
    assert_eq!(d.ground().len(), 1);
    let star = gen_star(6).unwrap();
    let d = derive(&star, 2).unwrap();
    assert_eq!(d.blocks().len(), 10);
    assert!(d.blocks().iter().all(|b| b.len() == 3));
    assert_eq!(d.ground().len(), 15);
    assert!(matches!(derive(&star, 4), Err(Error::OrderOutOfRange { m: 4, k: 3 })));
}

#[test]
fn matching_predicate() {
    let star = gen_star(6).unwrap();
    assert!(is_m_matching(&star, &edges(&["1 2 3", "1 4 5"]), 2).unwrap());
    assert!(is_m_matching(&star, &edges(&["1 2 3"]), 2).unwrap());
    let h = hg(&["1 2 3", "1 2 4"]);
    assert!(!is_m_matching(&h, h.edges(), 2).unwrap());
    assert!(matches!(
        is_m_matching(&h, &edges(&["7 8 9"]), 2),
        Err(Error::InvalidCertificateReference(_))
    ));
}

#[test]
fn cover_predicate() {
    let star = gen_star(6).unwrap();
    assert!(is_m_cover(&star, &edges(&["1 2", "1 3", "1 4", "1 5", "1 6"]), 2).unwrap());
    assert!(!is_m_cover(&star, &[], 2).unwrap());
    let single = hg(&["1 2 3"]);
    assert!(is_m_cover(&single, &edges(&["1 2", "1 3", "2 3"]), 2).unwrap());
    assert!(matches!(
        is_m_cover(&single, &edges(&["1 2 3"]), 2),
        Err(Error::MalformedCover(_))
    ));
}

#[test]
fn four_pair_star_cover_exists() {
    // Brute force over all 4-subsets of pairs through vertex 1.
    let star = gen_star(6).unwrap();
    let d = derive(&star, 2).unwrap();
    let pairs: Vec<Edge> = d.ground().to_vec();
    let mut found = false;
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() != 4 {
            continue;
        }
        let c: Vec<Edge> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i].clone()).collect();
        if is_m_cover(&star, &c, 2).unwrap() {
            found = true;
            break;
        }
    }
    assert!(found);
}

#[test]
fn triangle_hypergraphs() {
    assert_eq!(triangle_hypergraph(&SimpleGraph::complete(4)).edge_count(), 4);
    assert_eq!(triangle_hypergraph(&SimpleGraph::complete(5)).edge_count(), 10);
    let c5 = triangle_hypergraph(&SimpleGraph::cycle(5).unwrap());
    assert_eq!(c5.edge_count(), 0);
    assert_eq!(c5.vertices().len(), 5);
}

#[test]
fn linearity() {
    assert!(is_linear(&gen_projective_plane(2).unwrap().hypergraph));
    assert!(!is_linear(&hg(&["1 2 3", "1 2 4"])));
    assert!(!is_linear(&triangle_hypergraph(&SimpleGraph::complete(5))));
}

#[test]
fn fano_minus_line_detection() {
    let l = Limits::default();
    let fano = gen_projective_plane(2).unwrap().hypergraph;
    let pattern = fano.filter_edges(|e| e != &fano.edges()[0]);
    let map = contains_copy(&fano, &pattern, &l).unwrap().unwrap();
    assert!(is_embedding(&fano, &pattern, &map));
    assert!(contains_copy(&gen_star(6).unwrap(), &pattern, &l).unwrap().is_none());
    let id = contains_copy(&fano, &fano, &l).unwrap().unwrap();
    assert!(is_embedding(&fano, &fano, &id));
    let tight = Limits {
        pattern_vertices: 6,
        ..Limits::default()
    };
    assert!(matches!(contains_copy(&fano, &pattern, &tight), Err(Error::SizeLimitExceeded { .. })));
}

#[test]
fn derived_degrees() {
    assert_eq!(derived_max_degree(&hg(&["1 2 3", "1 2 4"]), 2).unwrap(), 2);
    assert_eq!(derived_max_degree(&hg(&["1 2 3 4"]), 3).unwrap(), 1);
    assert_eq!(derived_max_degree(&gen_star(6).unwrap(), 2).unwrap(), 4);
}

#[test]
fn text_format_round_trip() {
    let text = "# tripartite\n@class A: a1 a2\n@class B: b1\n@class C: c1\na1 b1 c1\na2 b1 c1\n";
    let inst = textfmt::parse(text).unwrap();
    assert_eq!(inst.hypergraph.edge_count(), 2);
    let p = inst.partite.clone().unwrap();
    p.validate(&inst.hypergraph).unwrap();
    let again = textfmt::parse(&inst.to_text(&["header".to_string()])).unwrap();
    assert_eq!(again, inst);
    assert!(textfmt::parse("1 2 3\n1 2\n").is_err());
    assert!(textfmt::parse("@bogus x\n1 2\n").is_err());
    let vs: BTreeSet<_> = inst.hypergraph.vertices().iter().map(|v| v.as_str().to_string()).collect();
    assert_eq!(vs.len(), 4);
}
