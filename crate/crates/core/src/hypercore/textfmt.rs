//! Shared line-oriented hypergraph format.
//!
//! ```text
//! # comment
//! @class A: a1 a2
//! @class B: b1 b2 b3
//! @class C: c1 c2
//! a1 b1 c1
//! a2 b2 c2
//! ```
//!
//! `#` starts a comment; `@class <name>: tokens` declares a partite class;
//! every other nonblank line is an edge. Uniformity is inferred from the
//! edges (or from the number of classes when there are none) and mixed edge
//! sizes are an error.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;

use super::{Edge, Hypergraph, PartiteStructure, VertexId};
use crate::error::{Error, Result};

/// A parsed instance: the hypergraph and its declared classes, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub hypergraph: Hypergraph,
    pub partite: Option<PartiteStructure>,
}

impl Instance {
    pub fn plain(hypergraph: Hypergraph) -> Self {
        Instance {
            hypergraph,
            partite: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn to_text(&self, header: &[String]) -> String {
        write(&self.hypergraph, self.partite.as_ref(), header)
    }
}

pub fn parse(text: &str) -> Result<Instance> {
    let mut classes: Vec<(String, BTreeSet<VertexId>)> = Vec::new();
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("@class") {
            let (name, toks) = rest
                .split_once(':')
                .ok_or_else(|| Error::parse(lineno + 1, "expected `@class <name>: tokens`"))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(Error::parse(lineno + 1, "class name is empty"));
            }
            let class: BTreeSet<VertexId> = toks.split_whitespace().map(VertexId::from).collect();
            classes.push((name.to_owned(), class));
        } else if line.starts_with('@') {
            return Err(Error::parse(lineno + 1, format!("unknown header {line:?}")));
        } else {
            let e = Edge::new(line.split_whitespace()).map_err(|e| Error::parse(lineno + 1, e.to_string()))?;
            edges.push((lineno + 1, e));
        }
    }
    let k = match edges.first() {
        Some((_, e)) => e.len(),
        None if !classes.is_empty() => classes.len(),
        None => return Err(Error::parse(0, "no edges and no classes: uniformity unknown")),
    };
    if let Some((line, e)) = edges.iter().find(|(_, e)| e.len() != k) {
        return Err(Error::parse(
            *line,
            format!("edge {{{e}}} has size {} but the instance is {k}-uniform", e.len()),
        ));
    }
    let class_vertices: Vec<VertexId> = classes.iter().flat_map(|(_, c)| c.iter().cloned()).collect();
    let hypergraph = Hypergraph::new(k, class_vertices, edges.into_iter().map(|(_, e)| e))
        .map_err(|e| Error::parse(0, e.to_string()))?;
    let partite = if classes.is_empty() {
        None
    } else {
        let p = PartiteStructure::new(classes)?;
        p.validate(&hypergraph)?;
        Some(p)
    };
    Ok(Instance { hypergraph, partite })
}

/// Serializes with `header` lines as leading comments.
pub fn write(h: &Hypergraph, partite: Option<&PartiteStructure>, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    if let Some(p) = partite {
        for (name, class) in p.classes() {
            let _ = writeln!(out, "@class {name}: {}", class.iter().join(" "));
        }
    }
    for e in h.edges() {
        let _ = writeln!(out, "{e}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_classes() {
        let text = "# tripartite\n@class A: a1 a2\n@class B: b1\n@class C: c1 c2\na1 b1 c1 # first\n\na2 b1 c2\n";
        let inst = parse(text).unwrap();
        assert_eq!(inst.hypergraph.uniformity(), 3);
        assert_eq!(inst.hypergraph.edge_count(), 2);
        assert_eq!(inst.partite.as_ref().unwrap().len(), 3);
        let again = parse(&inst.to_text(&[])).unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn mixed_sizes_rejected() {
        assert!(matches!(parse("1 2 3\n1 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn bad_partition_rejected() {
        assert!(parse("@class A: 1\n@class B: 2\n1 2 3\n").is_err());
        assert!(parse("@class A: 1 2\n@class B: 3\n1 2\n").is_err());
    }

    #[test]
    fn empty_rejected() {
        assert!(parse("# nothing\n").is_err());
        assert!(parse("@bogus\n1 2\n").is_err());
    }
}
