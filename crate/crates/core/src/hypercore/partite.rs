use std::collections::BTreeSet;

use super::{Hypergraph, VertexId};
use crate::error::{Error, Result};

/// Ordered vertex classes `V_1, ..., V_k` of a k-partite hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteStructure {
    classes: Vec<(String, BTreeSet<VertexId>)>,
}

impl PartiteStructure {
    /// Rejects overlapping classes.
    pub fn new(classes: Vec<(String, BTreeSet<VertexId>)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (name, class) in &classes {
            for v in class {
                if !seen.insert(v.clone()) {
                    return Err(Error::Structure(format!("vertex {v} appears in class {name} and another")));
                }
            }
        }
        Ok(PartiteStructure { classes })
    }

    pub fn classes(&self) -> &[(String, BTreeSet<VertexId>)] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &BTreeSet<VertexId> {
        &self.classes[i].1
    }

    pub fn class_of(&self, v: &VertexId) -> Option<usize> {
        self.classes.iter().position(|(_, c)| c.contains(v))
    }

    /// Classes partition `V(h)` and every edge meets every class exactly once.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        if self.classes.len() != h.uniformity() {
            return Err(Error::Structure(format!(
                "{} classes for a {}-uniform hypergraph",
                self.classes.len(),
                h.uniformity()
            )));
        }
        for v in h.vertices() {
            if self.class_of(v).is_none() {
                return Err(Error::Structure(format!("vertex {v} is in no class")));
            }
        }
        for (name, class) in &self.classes {
            if let Some(v) = class.iter().find(|v| !h.vertices().contains(v)) {
                return Err(Error::Structure(format!("class {name} names unknown vertex {v}")));
            }
        }
        for e in h.edges() {
            let mut hit = vec![0usize; self.classes.len()];
            for v in e {
                hit[self.class_of(v).expect("checked")] += 1;
            }
            if hit.iter().any(|&c| c != 1) {
                return Err(Error::Structure(format!("edge {{{e}}} does not meet every class once")));
            }
        }
        Ok(())
    }
}
