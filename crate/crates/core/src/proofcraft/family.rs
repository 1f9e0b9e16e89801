use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, PartiteStructure, VertexId};
use crate::intsolve::bitset::BitSet;
use crate::intsolve::{matching_size, maximum_independent_set, pair_matching};
use crate::limits::Limits;

pub type Pair = (VertexId, VertexId);

/// `F = (F_1, ..., F_p)`: bipartite edge sets over sides `B` and `C`, one
/// per vertex `a_i` of the singled-out class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFamilySeq {
    pub a: Vec<VertexId>,
    pub b: BTreeSet<VertexId>,
    pub c: BTreeSet<VertexId>,
    pub families: Vec<BTreeSet<Pair>>,
    /// Class names `(A, B, C)` used by [`from_family`].
    pub names: [String; 3],
}

impl EdgeFamilySeq {
    /// Families over explicit sides; `a_i` are named `a1, a2, ...`.
    pub fn new(b: BTreeSet<VertexId>, c: BTreeSet<VertexId>, families: Vec<BTreeSet<Pair>>) -> Result<Self> {
        let a = (1..=families.len()).map(|i| VertexId::new(format!("a{i}"))).collect();
        let f = EdgeFamilySeq {
            a,
            b,
            c,
            families,
            names: ["A".into(), "B".into(), "C".into()],
        };
        f.validate()?;
        Ok(f)
    }

    /// Sides are read off the pairs.
    pub fn from_pairs(families: Vec<BTreeSet<Pair>>) -> Result<Self> {
        let b = families.iter().flatten().map(|p| p.0.clone()).collect();
        let c = families.iter().flatten().map(|p| p.1.clone()).collect();
        Self::new(b, c, families)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a.len() != self.families.len() {
            return Err(Error::Structure("one family per vertex of A is required".into()));
        }
        if !self.b.is_disjoint(&self.c) || self.a.iter().any(|v| self.b.contains(v) || self.c.contains(v)) {
            return Err(Error::Structure("classes A, B, C must be disjoint".into()));
        }
        for (i, f) in self.families.iter().enumerate() {
            if let Some((x, y)) = f.iter().find(|(x, y)| !self.b.contains(x) || !self.c.contains(y)) {
                return Err(Error::Structure(format!("pair {x}{y} of F_{} is not in B x C", i + 1)));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn union(&self) -> BTreeSet<Pair> {
        self.families.iter().flatten().cloned().collect()
    }
}

impl fmt::Display for EdgeFamilySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, fam) in self.a.iter().zip(&self.families) {
            writeln!(f, "F[{a}] = {{{}}}", fam.iter().map(|(x, y)| format!("{x}{y}")).join(" "))?;
        }
        Ok(())
    }
}

/// Singles out class `a_class` of a tripartite `H`: `F_i = {bc : a_i b c ∈ H}`,
/// with `B`, `C` the remaining classes in order.
pub fn to_family(h: &Hypergraph, partite: &PartiteStructure, a_class: usize) -> Result<EdgeFamilySeq> {
    if partite.len() != 3 {
        return Err(Error::Structure(format!("{} classes; tripartite structure required", partite.len())));
    }
    partite.validate(h)?;
    if a_class >= 3 {
        return Err(Error::Parameter(format!("class index {a_class} out of range")));
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != a_class).collect();
    let (ib, ic) = (others[0], others[1]);
    let a: Vec<VertexId> = partite.class(a_class).iter().cloned().collect();
    let pick = |e: &Edge, class: usize| {
        e.iter()
            .find(|v| partite.class(class).contains(v))
            .expect("validated partite edge")
            .clone()
    };
    let mut families = vec![BTreeSet::new(); a.len()];
    for e in h.edges() {
        let i = a.binary_search(&pick(e, a_class)).expect("vertex of A");
        families[i].insert((pick(e, ib), pick(e, ic)));
    }
    let name = |i: usize| partite.classes()[i].0.clone();
    Ok(EdgeFamilySeq {
        a,
        b: partite.class(ib).clone(),
        c: partite.class(ic).clone(),
        families,
        names: [name(a_class), name(ib), name(ic)],
    })
}

/// Inverse of [`to_family`]: edges `a_i b c` for `bc ∈ F_i`.
pub fn from_family(f: &EdgeFamilySeq) -> Result<(Hypergraph, PartiteStructure)> {
    f.validate()?;
    let edges = f
        .a
        .iter()
        .zip(&f.families)
        .flat_map(|(a, fam)| fam.iter().map(move |(b, c)| Edge::new([a.clone(), b.clone(), c.clone()])))
        .collect::<Result<Vec<_>>>()?;
    let vertices = f.a.iter().chain(&f.b).chain(&f.c).cloned();
    let h = Hypergraph::new(3, vertices, edges)?;
    let [na, nb, nc] = f.names.clone();
    let p = PartiteStructure::new(vec![
        (na, f.a.iter().cloned().collect()),
        (nb, f.b.clone()),
        (nc, f.c.clone()),
    ])?;
    Ok((h, p))
}

/// `nu^(2)(F)`: largest `|N_1 ∪ ... ∪ N_p|` with `N_i` a matching in `F_i`.
///
/// Exact maximum independent set over the items `(i, bc)`, two items
/// conflicting when they share `i` and an endpoint or are the same pair.
/// Returns the value and one optimal choice of matchings.
pub fn family_nu2(f: &EdgeFamilySeq, limits: &Limits) -> Result<(usize, Vec<BTreeSet<Pair>>)> {
    let items: Vec<(usize, &Pair)> = f
        .families
        .iter()
        .enumerate()
        .flat_map(|(i, fam)| fam.iter().map(move |p| (i, p)))
        .collect();
    let n = items.len();
    let mut conflicts = vec![BitSet::new(n); n];
    for x in 0..n {
        for y in (x + 1)..n {
            let ((i, p), (j, q)) = (items[x], items[y]);
            let touch = p.0 == q.0 || p.1 == q.1;
            if p == q || (i == j && touch) {
                conflicts[x].insert(y);
                conflicts[y].insert(x);
            }
        }
    }
    let (chosen, _) = maximum_independent_set(&conflicts, limits.search_nodes)?;
    let mut matchings = vec![BTreeSet::new(); f.len()];
    for x in &chosen {
        matchings[items[*x].0].insert(items[*x].1.clone());
    }
    Ok((chosen.len(), matchings))
}

/// `tau^(2)(F) = min_Z |Z| + Σ tau(F_i - Z)` by enumerating every `Z`
/// inside `F_1 ∪ ... ∪ F_p` (pairs outside the union never help), with
/// `tau` from Kőnig's theorem. Returns the value and the first optimal `Z`.
pub fn family_tau2(f: &EdgeFamilySeq, limits: &Limits) -> Result<(usize, BTreeSet<Pair>)> {
    let union: Vec<Pair> = f.union().into_iter().collect();
    if union.len() > limits.brute_force_edges {
        return Err(Error::SizeLimitExceeded {
            what: "family union for subset enumeration",
            actual: union.len(),
            limit: limits.brute_force_edges,
        });
    }
    let bs: Vec<&VertexId> = f.b.iter().collect();
    let cs: Vec<&VertexId> = f.c.iter().collect();
    let index: Vec<(usize, usize)> = union
        .iter()
        .map(|(x, y)| (bs.binary_search(&x).expect("in B"), cs.binary_search(&y).expect("in C")))
        .collect();
    let members: Vec<Vec<usize>> = f
        .families
        .iter()
        .map(|fam| fam.iter().map(|p| union.binary_search(p).expect("in union")).collect())
        .collect();
    let mut best: Option<(usize, u64)> = None;
    for mask in 0u64..(1u64 << union.len()) {
        let mut value = mask.count_ones() as usize;
        if best.is_some_and(|(b, _)| value >= b) {
            continue;
        }
        for fam in &members {
            let mut adj = vec![Vec::new(); bs.len()];
            for &e in fam {
                if mask >> e & 1 == 0 {
                    adj[index[e].0].push(index[e].1);
                }
            }
            value += matching_size(&adj, cs.len());
        }
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, mask));
        }
    }
    let (value, mask) = best.expect("Z = ∅ is a candidate");
    let z = union
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Ok((value, z))
}

/// A family cover: pairs `Z` and a vertex cover `T_i` of each `F_i - Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCover {
    pub z: BTreeSet<Pair>,
    pub covers: Vec<BTreeSet<VertexId>>,
}

impl FamilyCover {
    /// Kőnig covers of `F_i - Z`.
    pub fn with_z(f: &EdgeFamilySeq, z: BTreeSet<Pair>) -> Self {
        let covers = f
            .families
            .iter()
            .map(|fam| pair_matching(fam.iter().filter(|p| !z.contains(p))).cover)
            .collect();
        FamilyCover { z, covers }
    }

    pub fn size(&self) -> usize {
        self.z.len() + self.covers.iter().map(BTreeSet::len).sum::<usize>()
    }

    pub fn validate(&self, f: &EdgeFamilySeq) -> bool {
        self.covers.len() == f.len()
            && f.families.iter().zip(&self.covers).all(|(fam, t)| {
                fam.iter()
                    .all(|p| self.z.contains(p) || t.contains(&p.0) || t.contains(&p.1))
            })
    }

    /// The corresponding 2-cover `Z ∪ {a_i x : x ∈ T_i}` of `from_family(F)`.
    pub fn to_pairs(&self, f: &EdgeFamilySeq) -> Result<Vec<Edge>> {
        let mut out = self
            .z
            .iter()
            .map(|(x, y)| Edge::new([x.clone(), y.clone()]))
            .collect::<Result<Vec<_>>>()?;
        for (a, t) in f.a.iter().zip(&self.covers) {
            for x in t {
                out.push(Edge::new([a.clone(), x.clone()])?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_tripartite_7cycle;
    use crate::hypercore::is_m_cover;
    use crate::intsolve::{nu_int, tau_int};

    fn pair(x: &str, y: &str) -> Pair {
        (VertexId::from(x), VertexId::from(y))
    }

    #[test]
    fn seven_cycle_family() {
        let (h, p) = gen_tripartite_7cycle();
        let f = to_family(&h, &p, 0).unwrap();
        assert_eq!(f.families[0].len(), 4);
        assert_eq!(f.families[1].len(), 3);
        let l = Limits::default();
        assert_eq!(family_nu2(&f, &l).unwrap().0, 3);
        let (tau, z) = family_tau2(&f, &l).unwrap();
        assert_eq!(tau, 4);
        let cover = FamilyCover::with_z(&f, z);
        assert_eq!(cover.size(), 4);
        assert!(cover.validate(&f));
        assert!(is_m_cover(&h, &cover.to_pairs(&f).unwrap(), 2).unwrap());
        let (back, bp) = from_family(&f).unwrap();
        assert_eq!(back, h);
        assert_eq!(bp, p);
    }

    #[test]
    fn single_edge_family() {
        let h = Hypergraph::parse_edges(&["a b c"]).unwrap();
        let set = |v: &str| BTreeSet::from([VertexId::from(v)]);
        let p = PartiteStructure::new(vec![("A".into(), set("a")), ("B".into(), set("b")), ("C".into(), set("c"))]).unwrap();
        let f = to_family(&h, &p, 0).unwrap();
        assert_eq!(f.families, vec![BTreeSet::from([pair("b", "c")])]);
    }

    #[test]
    fn identical_families() {
        let f1 = BTreeSet::from([pair("b1", "c1")]);
        let f = EdgeFamilySeq::from_pairs(vec![f1.clone(), f1]).unwrap();
        let l = Limits::default();
        assert_eq!(family_nu2(&f, &l).unwrap().0, 1);
        assert_eq!(family_tau2(&f, &l).unwrap().0, 1);
    }

    #[test]
    fn agrees_with_hypergraph_solvers() {
        let l = Limits::default();
        for seed in 0..10 {
            let (h, p) = crate::families::gen_random_partite(&[3, 3, 3], 9, seed).unwrap();
            let f = to_family(&h, &p, 0).unwrap();
            assert_eq!(family_nu2(&f, &l).unwrap().0, nu_int(&h, 2, &l).unwrap().0);
            assert_eq!(family_tau2(&f, &l).unwrap().0, tau_int(&h, 2, &l).unwrap().0);
        }
    }

    #[test]
    fn structure_errors() {
        let h = Hypergraph::parse_edges(&["a b"]).unwrap();
        let set = |v: &str| BTreeSet::from([VertexId::from(v)]);
        let p = PartiteStructure::new(vec![("A".into(), set("a")), ("B".into(), set("b"))]).unwrap();
        assert!(matches!(to_family(&h, &p, 0), Err(Error::Structure(_))));
        let b = BTreeSet::from([VertexId::from("b")]);
        let bad = EdgeFamilySeq::new(b.clone(), b, vec![]);
        assert!(bad.is_err());
    }
}
