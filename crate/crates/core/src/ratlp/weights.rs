use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{format_ratio, parse_ratio, Field};
use crate::error::{Error, Result};
use crate::hypercore::{DerivedSystem, Edge};
use crate::Rat;

/// What the keys of a [`Weights`] are.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Keys are m-sets; a fractional m-cover.
    Cover,
    /// Keys are edges; a fractional m-matching.
    Matching,
}

/// Nonnegative weighting of m-sets or edges. Zero weights are not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Weights<T> {
    kind: WeightKind,
    order: usize,
    weights: BTreeMap<Edge, T>,
}

impl<T: Field> Weights<T> {
    pub fn new(kind: WeightKind, order: usize, entries: impl IntoIterator<Item = (Edge, T)>) -> Result<Self> {
        let mut w = Weights::empty(kind, order);
        for (key, value) in entries {
            w.add(key, value)?;
        }
        Ok(w)
    }

    pub fn empty(kind: WeightKind, order: usize) -> Self {
        Weights {
            kind,
            order,
            weights: BTreeMap::new(),
        }
    }

    /// Adds `value` to the weight of `key`.
    pub fn add(&mut self, key: Edge, value: T) -> Result<()> {
        if value.is_negative() {
            return Err(Error::InvalidCertificate(format!("negative weight {value} on {{{key}}}")));
        }
        if self.kind == WeightKind::Cover && key.len() != self.order {
            return Err(Error::MalformedCover(format!(
                "weighted set {{{key}}} has size {} instead of {}",
                key.len(),
                self.order
            )));
        }
        if value.is_zero() {
            return Ok(());
        }
        let slot = self.weights.entry(key).or_insert_with(T::zero);
        *slot = slot.clone() + value;
        Ok(())
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    /// The `m` of the m-cover or m-matching.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, key: &Edge) -> T {
        self.weights.get(key).cloned().unwrap_or_else(T::zero)
    }

    pub fn total(&self) -> T {
        self.weights.values().fold(T::zero(), |a, b| a + b.clone())
    }

    pub fn support(&self) -> impl Iterator<Item = &Edge> {
        self.weights.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Edge, &T)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Every block of `d` carries total weight at least one.
    pub fn is_fractional_cover(&self, d: &DerivedSystem) -> bool {
        self.kind == WeightKind::Cover
            && self.order == d.m()
            && d.blocks().iter().all(|b| {
                b.iter()
                    .fold(T::zero(), |acc, &g| acc + self.get(&d.ground()[g]))
                    >= T::one()
            })
    }

    /// Keys are edges of `d`'s source and every m-set carries incident weight
    /// at most one.
    pub fn is_fractional_matching(&self, d: &DerivedSystem) -> bool {
        if self.kind != WeightKind::Matching || self.order != d.m() {
            return false;
        }
        if self.weights.keys().any(|e| d.source().binary_search(e).is_err()) {
            return false;
        }
        incident_loads(self, d).iter().all(|l| *l <= T::one())
    }
}

/// Incident matching weight on each ground element of `d`.
pub(crate) fn incident_loads<T: Field>(matching: &Weights<T>, d: &DerivedSystem) -> Vec<T> {
    let mut load = vec![T::zero(); d.ground().len()];
    for (b, block) in d.blocks().iter().enumerate() {
        let w = matching.get(&d.source()[b]);
        if w.is_zero() {
            continue;
        }
        for &g in block {
            load[g] = load[g].clone() + w.clone();
        }
    }
    load
}

/// Complementary slackness: every m-set with positive cover weight carries
/// incident matching weight exactly one.
///
/// Both arguments must be feasible for `d`.
pub fn check_slackness<T: Field>(cover: &Weights<T>, matching: &Weights<T>, d: &DerivedSystem) -> Result<bool> {
    if !cover.is_fractional_cover(d) {
        return Err(Error::InvalidCertificate("cover is not a feasible fractional cover".into()));
    }
    if !matching.is_fractional_matching(d) {
        return Err(Error::InvalidCertificate("matching is not a feasible fractional matching".into()));
    }
    let load = incident_loads(matching, d);
    Ok(cover.support().all(|u| match d.ground_index(u) {
        Some(g) => load[g].is_one(),
        None => false,
    }))
}

impl Weights<Rat> {
    /// One line per key: `<comma-joined tokens> <p>/<q>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.weights {
            let _ = writeln!(out, "{} {}", k.key(), format_ratio(v));
        }
        out
    }

    pub fn parse(kind: WeightKind, order: usize, text: &str) -> Result<Self> {
        let mut w = Weights::empty(kind, order);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .rsplit_once(char::is_whitespace)
                .ok_or_else(|| Error::parse(lineno + 1, "expected `<tokens> <p>/<q>`"))?;
            let edge = Edge::new(key.split(',').map(str::trim).filter(|t| !t.is_empty()))
                .map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
            let value = parse_ratio(value).map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
            w.add(edge, value)?;
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{derive, Hypergraph};
    use crate::rat;

    fn e(s: &str) -> Edge {
        Edge::parse(s).unwrap()
    }

    #[test]
    fn accumulates_and_rejects_negative() {
        let mut w = Weights::empty(WeightKind::Cover, 2);
        w.add(e("1 2"), rat(1, 2)).unwrap();
        w.add(e("1 2"), rat(1, 2)).unwrap();
        w.add(e("1 3"), rat(0, 1)).unwrap();
        assert_eq!(w.get(&e("1 2")), rat(1, 1));
        assert_eq!(w.len(), 1);
        assert!(w.add(e("1 3"), rat(-1, 2)).is_err());
        assert!(matches!(w.add(e("1 2 3"), rat(1, 2)), Err(Error::MalformedCover(_))));
    }

    #[test]
    fn text_round_trip() {
        let w = Weights::new(WeightKind::Cover, 2, vec![(e("1 2"), rat(1, 2)), (e("2 10"), rat(3, 1))]).unwrap();
        let text = w.to_text();
        assert_eq!(text, "1,2 1/2\n2,10 3/1\n");
        assert_eq!(Weights::parse(WeightKind::Cover, 2, &text).unwrap(), w);
        assert!(Weights::parse(WeightKind::Cover, 2, "1,2").is_err());
    }

    #[test]
    fn slackness_detects_loose_support() {
        let h = Hypergraph::parse_edges(&["1 2 3"]).unwrap();
        let d = derive(&h, 2).unwrap();
        let matching = Weights::new(WeightKind::Matching, 2, vec![(e("1 2 3"), rat(1, 1))]).unwrap();
        let cover = Weights::new(WeightKind::Cover, 2, vec![(e("1 2"), rat(1, 1))]).unwrap();
        assert!(check_slackness(&cover, &matching, &d).unwrap());
        // Positive weight on an m-set outside the matching's support.
        let loose = Weights::new(WeightKind::Cover, 2, vec![(e("1 2"), rat(1, 1)), (e("4 5"), rat(1, 1))]).unwrap();
        assert!(!check_slackness(&loose, &matching, &d).unwrap());
        let half = Weights::new(WeightKind::Matching, 2, vec![(e("1 2 3"), rat(1, 2))]).unwrap();
        assert!(!check_slackness(&cover, &half, &d).unwrap());
        let infeasible = Weights::new(WeightKind::Cover, 2, vec![(e("1 2"), rat(1, 2))]).unwrap();
        assert!(matches!(
            check_slackness(&infeasible, &matching, &d),
            Err(Error::InvalidCertificate(_))
        ));
    }
}
