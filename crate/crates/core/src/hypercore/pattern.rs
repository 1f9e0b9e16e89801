use std::collections::{BTreeMap, HashSet};

use super::{Hypergraph, VertexId};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Searches for an injective vertex map carrying every edge of `pattern` onto
/// an edge of `host`.
///
/// Plain backtracking over injections, pattern vertices taken by decreasing
/// degree, host candidates filtered by degree. Patterns with more than
/// `limits.pattern_vertices` vertices are refused.
pub fn contains_copy(
    host: &Hypergraph,
    pattern: &Hypergraph,
    limits: &Limits,
) -> Result<Option<BTreeMap<VertexId, VertexId>>> {
    let pv: Vec<VertexId> = pattern.vertices().iter().cloned().collect();
    if pv.len() > limits.pattern_vertices {
        return Err(Error::SizeLimitExceeded {
            what: "pattern vertices",
            actual: pv.len(),
            limit: limits.pattern_vertices,
        });
    }
    let hv: Vec<VertexId> = host.vertices().iter().cloned().collect();
    if pv.len() > hv.len() {
        return Ok(None);
    }
    if !pattern.is_empty() && pattern.uniformity() != host.uniformity() {
        return Ok(None);
    }

    let host_index = |v: &VertexId| hv.binary_search(v).expect("host vertex");
    let host_edges: HashSet<Vec<usize>> = host
        .edges()
        .iter()
        .map(|e| e.iter().map(host_index).collect())
        .collect();
    let host_degree: Vec<usize> = hv.iter().map(|v| host.degree(v)).collect();

    // Assignment order: pattern vertices by decreasing degree, ties canonical.
    let mut order: Vec<usize> = (0..pv.len()).collect();
    let pdeg: Vec<usize> = pv.iter().map(|v| pattern.degree(v)).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(pdeg[i]));
    let mut position = vec![0; pv.len()];
    for (pos, &i) in order.iter().enumerate() {
        position[i] = pos;
    }
    // Each pattern edge is checked once its last vertex (in order) is mapped.
    let mut check_at: Vec<Vec<Vec<usize>>> = vec![Vec::new(); pv.len()];
    for e in pattern.edges() {
        let idx: Vec<usize> = e.iter().map(|v| pv.binary_search(v).expect("pattern vertex")).collect();
        let last = idx.iter().map(|&i| position[i]).max().expect("nonempty edge");
        check_at[last].push(idx);
    }

    let mut search = Search {
        order: &order,
        pdeg: &pdeg,
        host_degree: &host_degree,
        host_edges: &host_edges,
        check_at: &check_at,
        image: vec![usize::MAX; pv.len()],
        used: vec![false; hv.len()],
    };
    if search.extend(0) {
        Ok(Some(
            pv.iter()
                .zip(&search.image)
                .map(|(p, &h)| (p.clone(), hv[h].clone()))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    order: &'a [usize],
    pdeg: &'a [usize],
    host_degree: &'a [usize],
    host_edges: &'a HashSet<Vec<usize>>,
    check_at: &'a [Vec<Vec<usize>>],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let p = self.order[pos];
        for h in 0..self.host_degree.len() {
            if self.used[h] || self.host_degree[h] < self.pdeg[p] {
                continue;
            }
            self.image[p] = h;
            self.used[h] = true;
            let ok = self.check_at[pos].iter().all(|edge| {
                let mut mapped: Vec<usize> = edge.iter().map(|&v| self.image[v]).collect();
                mapped.sort_unstable();
                self.host_edges.contains(&mapped)
            });
            if ok && self.extend(pos + 1) {
                return true;
            }
            self.used[h] = false;
            self.image[p] = usize::MAX;
        }
        false
    }
}

/// Checks that `map` is injective and carries every pattern edge to a host edge.
pub fn is_embedding(host: &Hypergraph, pattern: &Hypergraph, map: &BTreeMap<VertexId, VertexId>) -> bool {
    let images: HashSet<&VertexId> = map.values().collect();
    images.len() == map.len()
        && pattern.vertices().iter().all(|v| map.contains_key(v))
        && pattern.edges().iter().all(|e| {
            super::Edge::new(e.iter().map(|v| map[v].clone()))
                .map(|img| host.contains_edge(&img))
                .unwrap_or(false)
        })
}
