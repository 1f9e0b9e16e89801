use super::bitset::BitSet;
use super::{CoverCert, SearchStats};
use crate::error::{Error, Result};
use crate::hypercore::{derive, DerivedSystem, Hypergraph};
use crate::limits::Limits;
use crate::ratlp::{ceil_to_usize, tau_star};

/// Root LP bounds are only computed for derived systems up to this many blocks.
const LP_BOUND_MAX_BLOCKS: usize = 200;

/// Exact `tau^(m)(H)`, the minimum m-cover, with a certificate.
///
/// Branch and bound over the derived system: branch on the uncovered block
/// with the fewest admissible m-sets (ties by canonical order), bound by a
/// greedy packing of blocks with disjoint admissible sets, start from a
/// greedy cover and stop as soon as the root LP bound `ceil(tau*)` is met.
pub fn tau_int(h: &Hypergraph, m: usize, limits: &Limits) -> Result<(usize, CoverCert, SearchStats)> {
    let d = derive(h, m)?;
    let nb = d.blocks().len();
    if nb == 0 {
        return Ok((0, CoverCert::new(m, Vec::new()), SearchStats::default()));
    }
    let ng = d.ground().len();
    let mut block_elems = vec![BitSet::new(ng); nb];
    let mut elem_blocks = vec![BitSet::new(nb); ng];
    for (b, block) in d.blocks().iter().enumerate() {
        for &g in block {
            block_elems[b].insert(g);
            elem_blocks[g].insert(b);
        }
    }

    let greedy = greedy_cover(&elem_blocks, nb);
    let mut lower = 1;
    if nb <= LP_BOUND_MAX_BLOCKS && d.nonzeros() <= limits.lp_nonzeros {
        lower = lower.max(ceil_to_usize(&tau_star(h, m, limits)?.value));
    }

    let mut search = CoverSearch {
        block_elems: &block_elems,
        elem_blocks: &elem_blocks,
        best: greedy,
        lower,
        stats: SearchStats::default(),
        node_limit: limits.search_nodes,
    };
    search.stats.lower_bound = lower;
    search.stats.bound_trace.push(search.best.len());
    if search.best.len() > lower {
        let mut chosen = Vec::new();
        search.dfs(&BitSet::full(nb), &BitSet::new(ng), &mut chosen);
        if search.stats.nodes > search.node_limit {
            return Err(Error::SizeLimitExceeded {
                what: "branch-and-bound nodes",
                actual: search.stats.nodes as usize,
                limit: search.node_limit as usize,
            });
        }
    }
    let mut best = search.best;
    best.sort_unstable();
    let cert = cert_from(&d, &best);
    Ok((best.len(), cert, search.stats))
}

fn cert_from(d: &DerivedSystem, elems: &[usize]) -> CoverCert {
    CoverCert::new(d.m(), elems.iter().map(|&g| d.ground()[g].clone()).collect())
}

/// Repeatedly takes the m-set hitting the most uncovered blocks.
fn greedy_cover(elem_blocks: &[BitSet], nb: usize) -> Vec<usize> {
    let mut uncovered = BitSet::full(nb);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (g, _) = elem_blocks
            .iter()
            .enumerate()
            .map(|(g, bs)| (g, bs.and(&uncovered).count()))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        chosen.push(g);
        uncovered = uncovered.and_not(&elem_blocks[g]);
    }
    chosen
}

struct CoverSearch<'a> {
    block_elems: &'a [BitSet],
    elem_blocks: &'a [BitSet],
    best: Vec<usize>,
    lower: usize,
    stats: SearchStats,
    node_limit: u64,
}

impl CoverSearch<'_> {
    fn dfs(&mut self, uncovered: &BitSet, excluded: &BitSet, chosen: &mut Vec<usize>) {
        self.stats.nodes += 1;
        if self.stats.nodes > self.node_limit {
            return;
        }
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
                self.stats.bound_trace.push(chosen.len());
            }
            return;
        }
        if chosen.len() + 1 >= self.best.len() {
            return;
        }

        let mut avail: Vec<(usize, BitSet, usize)> = uncovered
            .iter()
            .map(|b| {
                let a = self.block_elems[b].and_not(excluded);
                let c = a.count();
                (b, a, c)
            })
            .collect();
        if avail.iter().any(|(_, _, c)| *c == 0) {
            return;
        }
        avail.sort_by_key(|(b, _, c)| (*c, *b));

        let mut used = BitSet::new(excluded.capacity());
        let mut packing = 0;
        for (_, a, _) in &avail {
            if !a.intersects(&used) {
                packing += 1;
                used.union_with(a);
            }
        }
        if chosen.len() + packing >= self.best.len() {
            return;
        }

        let (_, branch, _) = &avail[0];
        let mut candidates: Vec<(usize, usize)> = branch
            .iter()
            .map(|g| (g, self.elem_blocks[g].and(uncovered).count()))
            .collect();
        candidates.sort_by_key(|&(g, hits)| (std::cmp::Reverse(hits), g));

        let mut excl = excluded.clone();
        for (g, _) in candidates {
            chosen.push(g);
            let rest = uncovered.and_not(&self.elem_blocks[g]);
            self.dfs(&rest, &excl, chosen);
            chosen.pop();
            excl.insert(g);
            if self.best.len() <= self.lower || self.stats.nodes > self.node_limit {
                return;
            }
        }
    }
}
