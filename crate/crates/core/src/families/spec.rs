use std::collections::BTreeMap;
use std::fmt;

use super::*;
use crate::error::{Error, Result};
use crate::hypercore::{Edge, Instance};

/// A named generator call: family, integer parameters and an optional seed.
///
/// Rendered as `family key=value ... seed=s`, which is also what [`GenSpec::parse`] reads.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GenSpec {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    /// Partite class sizes (`random-partite`).
    pub classes: Vec<usize>,
    /// Removed edges (`complete`).
    pub removed: Vec<Edge>,
    pub seed: Option<u64>,
}

pub const FAMILIES: &[&str] = &[
    "star",
    "complete",
    "plane",
    "join",
    "g42",
    "cycle7",
    "random",
    "random-partite",
];

impl GenSpec {
    pub fn new(family: &str) -> Self {
        GenSpec {
            family: family.to_string(),
            ..GenSpec::default()
        }
    }

    pub fn param(mut self, key: &str, value: usize) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    fn get(&self, key: &str) -> Result<usize> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Parameter(format!("family {} needs parameter {key}", self.family)))
    }

    /// Parses the `Display` form, e.g. `random k=3 n=7 edges=10 seed=1` or
    /// `complete n=5 k=3 remove=1,2,3`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut toks = s.split_whitespace();
        let family = toks.next().ok_or_else(|| Error::Parameter("empty generator spec".into()))?;
        let mut spec = GenSpec::new(family);
        for tok in toks {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected key=value, got {tok}")))?;
            let bad = || Error::Parameter(format!("bad value in {tok}"));
            match key {
                "seed" => spec.seed = Some(value.parse().map_err(|_| bad())?),
                "classes" => {
                    spec.classes = value
                        .split(',')
                        .map(|v| v.parse().map_err(|_| bad()))
                        .collect::<Result<_>>()?
                }
                "remove" => spec.removed.push(Edge::parse(value)?),
                _ => {
                    spec.params.insert(key.to_string(), value.parse().map_err(|_| bad())?);
                }
            }
        }
        Ok(spec)
    }

    pub fn generate(&self) -> Result<Instance> {
        let seed = || {
            self.seed
                .ok_or_else(|| Error::Parameter(format!("family {} needs a seed", self.family)))
        };
        Ok(match self.family.as_str() {
            "star" => Instance::plain(gen_star(self.get("n")?)?),
            "complete" => Instance::plain(gen_complete_subsets(self.get("n")?, self.get("k")?, &self.removed)?),
            "plane" => Instance::plain(gen_projective_plane(self.get("q")?)?.hypergraph),
            "join" => {
                let plane = gen_projective_plane(self.get("q")?)?.hypergraph;
                let parts = vec![plane; self.get("parts")?];
                Instance::plain(join(&parts)?.hypergraph)
            }
            "g42" => Instance::plain(gen_g42_witness()),
            "cycle7" => {
                let (h, p) = gen_tripartite_7cycle();
                Instance {
                    hypergraph: h,
                    partite: Some(p),
                }
            }
            "random" => Instance::plain(gen_random(self.get("k")?, self.get("n")?, self.get("edges")?, seed()?)?),
            "random-partite" => {
                let (h, p) = gen_random_partite(&self.classes, self.get("edges")?, seed()?)?;
                Instance {
                    hypergraph: h,
                    partite: Some(p),
                }
            }
            other => {
                return Err(Error::Parameter(format!(
                    "unknown family {other}; expected one of {}",
                    FAMILIES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if !self.classes.is_empty() {
            let c: Vec<String> = self.classes.iter().map(usize::to_string).collect();
            write!(f, " classes={}", c.join(","))?;
        }
        for e in &self.removed {
            write!(f, " remove={}", e.key())?;
        }
        if let Some(s) = self.seed {
            write!(f, " seed={s}")?;
        }
        Ok(())
    }
}
