use super::bitset::BitSet;
use super::{MatchingCert, SearchStats};
use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::limits::Limits;

/// Exact `nu^(m)(H)`, the maximum m-matching, with a certificate.
///
/// Maximum independent set in the graph joining edges that share at least
/// `m` vertices, found as a maximum clique of the complement with greedy
/// colouring bounds.
pub fn nu_int(h: &Hypergraph, m: usize, limits: &Limits) -> Result<(usize, MatchingCert, SearchStats)> {
    let k = h.uniformity();
    if m == 0 || m > k {
        return Err(Error::OrderOutOfRange { m, k });
    }
    let edges = h.edges();
    let n = edges.len();
    let mut conflicts = vec![BitSet::new(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if edges[i].intersection_len(&edges[j]) >= m {
                conflicts[i].insert(j);
                conflicts[j].insert(i);
            }
        }
    }
    let (set, stats) = maximum_independent_set(&conflicts, limits.search_nodes)?;
    let cert = MatchingCert::new(m, set.iter().map(|&i| edges[i].clone()).collect());
    Ok((set.len(), cert, stats))
}

/// Maximum independent set of the graph given by `conflicts` (symmetric,
/// irreflexive). Returns sorted vertex indices.
pub(crate) fn maximum_independent_set(conflicts: &[BitSet], node_limit: u64) -> Result<(Vec<usize>, SearchStats)> {
    let n = conflicts.len();
    let all = BitSet::full(n);
    let compat: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut c = all.and_not(&conflicts[v]);
            c.remove(v);
            c
        })
        .collect();
    let mut search = CliqueSearch {
        adj: &compat,
        best: Vec::new(),
        stats: SearchStats::default(),
        node_limit,
    };
    // Greedy start in canonical order.
    let mut free = all.clone();
    for (v, c) in compat.iter().enumerate() {
        if free.contains(v) {
            search.best.push(v);
            free = free.and(c);
        }
    }
    search.stats.bound_trace.push(search.best.len());
    let mut current = Vec::new();
    if n > 0 {
        search.expand(all, &mut current);
    }
    if search.stats.nodes > node_limit {
        return Err(Error::SizeLimitExceeded {
            what: "branch-and-bound nodes",
            actual: search.stats.nodes as usize,
            limit: node_limit as usize,
        });
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok((best, search.stats))
}

struct CliqueSearch<'a> {
    adj: &'a [BitSet],
    best: Vec<usize>,
    stats: SearchStats,
    node_limit: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut candidates: BitSet, current: &mut Vec<usize>) {
        self.stats.nodes += 1;
        if self.stats.nodes > self.node_limit {
            return;
        }
        let coloured = self.colour_sort(&candidates);
        for &(v, colour) in coloured.iter().rev() {
            if current.len() + colour <= self.best.len() {
                return;
            }
            current.push(v);
            let next = candidates.and(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                    self.stats.bound_trace.push(current.len());
                }
            } else {
                self.expand(next, current);
            }
            current.pop();
            candidates.remove(v);
            if self.stats.nodes > self.node_limit {
                return;
            }
        }
    }

    /// Greedy sequential colouring; returns `(vertex, colour)` by increasing colour.
    fn colour_sort(&self, candidates: &BitSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(candidates.count());
        let mut uncoloured = candidates.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            loop {
                let Some(v) = q.iter().next() else { break };
                q.remove(v);
                q = q.and_not(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }
}
