use std::collections::BTreeSet;
use std::fmt;

use mcover::families::{gen_complete_subsets, gen_random, rng, GenSpec};
use mcover::intsolve::{nu_int, tau_int};
use mcover::ratlp::format_ratio;
use mcover::{rat, Edge, Error, Hypergraph, Instance, Limits, Rat, Result};
use num_traits::ToPrimitive;
use rand::Rng;
use sha2::{Digest, Sha256};

use crate::cli::SearchArgs;
use crate::io::Output;
use crate::Exit;

/// Largest `n`, `k` and candidate-edge count accepted by `--exhaustive`.
pub const EXHAUSTIVE_MAX_N: usize = 8;
pub const EXHAUSTIVE_MAX_K: usize = 5;
pub const EXHAUSTIVE_MAX_CANDIDATES: usize = 16;

/// A best-so-far instance of a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    /// Where the search started (hill climbing) or which subset it is (exhaustive).
    pub spec: GenSpec,
    pub iteration: usize,
    /// SHA-256 of the instance in the text format.
    pub hash: String,
    pub tau: usize,
    pub nu: usize,
    /// `tau / nu`, exact.
    pub ratio: Rat,
    pub hypergraph: Hypergraph,
}

impl fmt::Display for SearchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ratio={} tau={} nu={} edges={} iter={} hash={} from=\"{}\"",
            format_ratio(&self.ratio),
            self.tau,
            self.nu,
            self.hypergraph.edge_count(),
            self.iteration,
            self.hash,
            self.spec
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub iters: usize,
    pub seed: u64,
    pub restarts: usize,
}

pub fn instance_hash(h: &Hypergraph) -> String {
    Sha256::digest(Instance::plain(h.clone()).to_text(&[]).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// A ratio above 2 for 3-uniform hypergraphs at order 2 contradicts the
/// conjectured bound and is flagged.
pub fn is_refutation_candidate(k: usize, m: usize, ratio: &Rat) -> bool {
    k == 3 && m == 2 && *ratio > rat(2, 1)
}

fn candidates(k: usize, n: usize) -> Result<Vec<Edge>> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    Ok(gen_complete_subsets(n, k, &[])?.edges().to_vec())
}

struct Tracker<'a> {
    cfg: SearchConfig,
    cands: &'a [Edge],
    limits: &'a Limits,
    best: Option<Rat>,
    records: Vec<SearchRecord>,
}

impl Tracker<'_> {
    fn hypergraph(&self, chosen: &BTreeSet<usize>) -> Result<Hypergraph> {
        Hypergraph::from_edges(self.cfg.k, chosen.iter().map(|&i| self.cands[i].clone()))
    }

    /// Scores `chosen` and records it when it beats the best ratio so far.
    fn evaluate(&mut self, chosen: &BTreeSet<usize>, spec: &GenSpec, iteration: usize) -> Result<Rat> {
        let h = self.hypergraph(chosen)?;
        let (tau, _, _) = tau_int(&h, self.cfg.m, self.limits)?;
        let (nu, _, _) = nu_int(&h, self.cfg.m, self.limits)?;
        let ratio = Rat::new(tau.into(), nu.max(1).into());
        if self.best.as_ref().is_none_or(|b| ratio > *b) {
            self.best = Some(ratio.clone());
            self.records.push(SearchRecord {
                spec: spec.clone(),
                iteration,
                hash: instance_hash(&h),
                tau,
                nu,
                ratio: ratio.clone(),
                hypergraph: h,
            });
        }
        Ok(ratio)
    }
}

/// Restarted hill climbing on `tau^(m) / nu^(m)` over k-uniform
/// hypergraphs on `n` vertices. Each restart begins from a seeded random
/// instance; a step adds, removes or swaps one edge and is kept when the
/// ratio does not drop. Returns the strictly increasing best-so-far records.
pub fn hill_climb(cfg: SearchConfig, limits: &Limits) -> Result<Vec<SearchRecord>> {
    let cands = candidates(cfg.k, cfg.n)?;
    if cfg.m == 0 || cfg.m > cfg.k {
        return Err(Error::OrderOutOfRange { m: cfg.m, k: cfg.k });
    }
    let restarts = cfg.restarts.max(1);
    let per_restart = cfg.iters.div_ceil(restarts);
    let mut t = Tracker { cfg, cands: &cands, limits, best: None, records: Vec::new() };
    let mut iteration = 0;
    for r in 0..restarts as u64 {
        let start_seed = cfg.seed.wrapping_mul(1_000_003).wrapping_add(r);
        let mut rr = rng(start_seed);
        let edges = rr.random_range(1..=cands.len().min(2 * cfg.n));
        let spec = GenSpec::new("random")
            .param("k", cfg.k)
            .param("n", cfg.n)
            .param("edges", edges)
            .with_seed(start_seed);
        let start = gen_random(cfg.k, cfg.n, edges, start_seed)?;
        let mut current: BTreeSet<usize> = start
            .edges()
            .iter()
            .map(|e| cands.binary_search(e).expect("generated edges are candidates"))
            .collect();
        let mut score = t.evaluate(&current, &spec, iteration)?;
        for _ in 0..per_restart {
            if iteration >= cfg.iters {
                break;
            }
            iteration += 1;
            let absent: Vec<usize> = (0..cands.len()).filter(|i| !current.contains(i)).collect();
            let present: Vec<usize> = current.iter().copied().collect();
            let mut next = current.clone();
            let add = !absent.is_empty() && (present.len() == 1 || rr.random_bool(0.5));
            let remove = present.len() > 1 && (absent.is_empty() || rr.random_bool(0.5));
            if remove {
                next.remove(&present[rr.random_range(0..present.len())]);
            }
            if add {
                next.insert(absent[rr.random_range(0..absent.len())]);
            }
            if next == current {
                continue;
            }
            let s = t.evaluate(&next, &spec, iteration)?;
            if s >= score {
                current = next;
                score = s;
            }
        }
    }
    Ok(t.records)
}

/// Every nonempty k-uniform hypergraph on `n` labelled vertices, in subset
/// order, with the best-so-far records.
pub fn exhaustive(k: usize, m: usize, n: usize, limits: &Limits) -> Result<Vec<SearchRecord>> {
    if n > EXHAUSTIVE_MAX_N || k > EXHAUSTIVE_MAX_K {
        return Err(Error::SizeLimitExceeded {
            what: "exhaustive search size",
            actual: n.max(k),
            limit: if n > EXHAUSTIVE_MAX_N { EXHAUSTIVE_MAX_N } else { EXHAUSTIVE_MAX_K },
        });
    }
    let cands = candidates(k, n)?;
    if cands.len() > EXHAUSTIVE_MAX_CANDIDATES {
        return Err(Error::SizeLimitExceeded {
            what: "exhaustive search candidate edges",
            actual: cands.len(),
            limit: EXHAUSTIVE_MAX_CANDIDATES,
        });
    }
    if m == 0 || m > k {
        return Err(Error::OrderOutOfRange { m, k });
    }
    let cfg = SearchConfig { k, m, n, iters: 0, seed: 0, restarts: 1 };
    let mut t = Tracker { cfg, cands: &cands, limits, best: None, records: Vec::new() };
    for mask in 1u32..(1 << cands.len()) {
        let chosen: BTreeSet<usize> = (0..cands.len()).filter(|i| mask >> i & 1 == 1).collect();
        let spec = GenSpec::new("exhaustive")
            .param("k", k)
            .param("n", n)
            .param("mask", mask as usize);
        t.evaluate(&chosen, &spec, mask as usize)?;
    }
    Ok(t.records)
}

pub fn command(a: &SearchArgs, limits: &Limits, out: &mut Output) -> Result<Exit> {
    let records = if a.exhaustive {
        exhaustive(a.k, a.m, a.n, limits)?
    } else {
        let cfg = SearchConfig { k: a.k, m: a.m, n: a.n, iters: a.iters, seed: a.seed, restarts: a.restarts };
        hill_climb(cfg, limits)?
    };
    for r in &records {
        out.line(&format!("# record {r}"))?;
    }
    let Some(best) = records.last() else {
        return Ok(Exit::Ok);
    };
    let header = [format!("best tau^({m})/nu^({m}) = {}", format_ratio(&best.ratio), m = a.m)];
    out.write(&Instance::plain(best.hypergraph.clone()).to_text(&header))?;
    eprintln!(
        "best ratio {} (about {:.3}) after {} records",
        format_ratio(&best.ratio),
        best.ratio.to_f64().unwrap_or(f64::NAN),
        records.len()
    );
    let flagged: Vec<&SearchRecord> = records
        .iter()
        .filter(|r| is_refutation_candidate(a.k, a.m, &r.ratio))
        .collect();
    for r in &flagged {
        eprintln!("refutation candidate: {r}");
    }
    Ok(if flagged.is_empty() { Exit::Ok } else { Exit::Failure })
}
