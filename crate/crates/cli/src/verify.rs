use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use mcover::families::{
    gen_complete_subsets, gen_g42_witness, gen_projective_plane, gen_random, gen_random_bipartite,
    gen_random_partite, gen_star, gen_tripartite_7cycle, join, join_fractional_matching, rng,
};
use mcover::hypercore::{derive, is_m_cover};
use mcover::intsolve::{min_z_value, nu_int, p_factor_max, tau_int};
use mcover::proofcraft::{
    cover45, family_nu2, family_tau2, g42_cover, kk1_cover, mimic_cover, sunflower_compress, sunflower_find,
    to_family, tunu_construct,
};
use mcover::ratlp::{check_slackness, format_ratio, nu_star, parse_ratio, tau_star};
use mcover::{rat, rat_int, Edge, Error, Hypergraph, Limits, Rat, Result, SimpleGraph};
use rand::Rng;

use crate::cli::VerifyArgs;
use crate::io::{read_text, Output};
use crate::Exit;

/// Check ids with a one-line statement of what each verifies, in suite order.
pub const CHECKS: [(&str, &str); 11] = [
    ("star", "star(n) for n in {4,6,8}: tau^(2) = n-2, nu^(2) = (n-2)/2, tau*^(2) = (n-1)/2"),
    ("g42", "4-uniform 2-intersecting witness: nu^(2) = 1, tau^(2) = 4, constructive cover of size 4"),
    ("binom5", "binom([5],3) minus one triple, and minus two triples sharing a vertex: nu^(2) = 2, tau^(2) = 4"),
    ("kk1", "binom([k+1],k) for k in {3,4,5}: nu^(k-1) = 1, tau^(k-1) = ceil((k+1)/2), matched by the construction"),
    ("cycle7", "tripartite 7-cycle: nu^(2) = 3, tau^(2) = 4, derived system is a 7-cycle"),
    ("fano-join", "join of two Fano planes: 49 edges, nu^(2) = 1, constant 1/9 is a fractional 2-matching, nu*^(2) >= 49/9"),
    ("pfactor", "200 seeded bipartite graphs with at most 12 edges, p in {1,2,3}: max p-factor = min over Z"),
    ("family", "100 seeded tripartite instances: family nu and tau equal the hypergraph nu^(2) and tau^(2)"),
    ("sweep", "inequality sweep, 300 seeded instances per class"),
    ("sunflower", "20 constructed nu^(m) = 1 instances: compressing a sunflower never lowers tau*^(m)"),
    ("duality", "tau* = nu* with complementary slackness on every instance of the suite"),
];

pub const SWEEP_PER_CLASS: usize = 300;
pub const PFACTOR_GRAPHS: usize = 200;
pub const FAMILY_INSTANCES: usize = 100;
pub const SUNFLOWER_INSTANCES: usize = 20;

/// Expected exact values, keyed like `star.6.tau` or `sweep.cover45`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Goldens {
    values: BTreeMap<String, Rat>,
}

impl Default for Goldens {
    fn default() -> Self {
        let mut values = BTreeMap::new();
        let mut put = |k: String, v: Rat| {
            values.insert(k, v);
        };
        for n in [4i64, 6, 8] {
            put(format!("star.{n}.tau"), rat_int(n - 2));
            put(format!("star.{n}.nu"), rat_int((n - 2) / 2));
            put(format!("star.{n}.tau*"), rat(n - 1, 2));
        }
        put("g42.nu".into(), rat_int(1));
        put("g42.tau".into(), rat_int(4));
        put("g42.cover".into(), rat_int(4));
        put("binom5.nu".into(), rat_int(2));
        put("binom5.tau".into(), rat_int(4));
        for k in [3i64, 4, 5] {
            put(format!("kk1.{k}.nu"), rat_int(1));
            put(format!("kk1.{k}.tau"), rat_int((k + 2) / 2));
        }
        put("cycle7.nu".into(), rat_int(3));
        put("cycle7.tau".into(), rat_int(4));
        put("fano-join.edges".into(), rat_int(49));
        put("fano-join.nu".into(), rat_int(1));
        put("fano-join.weight".into(), rat(1, 9));
        put("fano-join.total".into(), rat(49, 9));
        put("sweep.ratio3".into(), rat(66, 23));
        put("sweep.gap3".into(), rat_int(2));
        put("sweep.cover45".into(), rat(9, 2));
        put("sweep.mimic".into(), rat(9, 5));
        put("sweep.tunu".into(), rat(5, 3));
        Goldens { values }
    }
}

impl Goldens {
    pub fn get(&self, key: &str) -> Rat {
        self.values[key].clone()
    }

    fn int(&self, key: &str) -> String {
        format_value(&self.get(key))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn set(&mut self, key: &str, value: Rat) -> Result<()> {
        match self.values.get_mut(key) {
            Some(v) => {
                *v = value;
                Ok(())
            }
            None => Err(Error::Parameter(format!("unknown golden key {key:?}"))),
        }
    }

    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_overrides(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse { line: i + 1, msg: "expected `key = value`".into() })?;
            self.set(k.trim(), parse_ratio(v)?)?;
        }
        Ok(())
    }
}

/// Integers without a denominator, other rationals as `p/q`.
fn format_value(r: &Rat) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format_ratio(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub id: String,
    pub statement: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.len() - self.passed()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{} {:<10} {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.statement)?;
            writeln!(f, "     expected: {}", r.expected)?;
            writeln!(f, "     observed: {}", r.observed)?;
        }
        writeln!(f, "{} checks: {} passed, {} failed", self.rows.len(), self.passed(), self.failed())
    }
}

struct Outcome {
    expected: String,
    observed: String,
}

/// Runs every check, or only `only`. Solver errors inside a check become a
/// failing row.
pub fn run_suite(goldens: &Goldens, only: Option<&str>, limits: &Limits) -> Result<VerifyReport> {
    if let Some(id) = only {
        if !CHECKS.iter().any(|(c, _)| *c == id) {
            let ids: Vec<&str> = CHECKS.iter().map(|(c, _)| *c).collect();
            return Err(Error::Parameter(format!("unknown check {id:?}; expected one of {}", ids.join(", "))));
        }
    }
    let mut report = VerifyReport::default();
    for (id, statement) in CHECKS {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let row = match run_check(id, goldens, limits) {
            Ok(o) => CheckRow {
                id: id.into(),
                statement: statement.into(),
                pass: o.expected == o.observed,
                expected: o.expected,
                observed: o.observed,
            },
            Err(e) => CheckRow {
                id: id.into(),
                statement: statement.into(),
                expected: "no error".into(),
                observed: format!("error: {e}"),
                pass: false,
            },
        };
        report.rows.push(row);
    }
    Ok(report)
}

pub fn command(a: &VerifyArgs, limits: &Limits, out: &mut Output) -> Result<Exit> {
    let mut goldens = Goldens::default();
    if let Some(p) = &a.goldens {
        goldens.apply_overrides(&read_text(Some(p))?)?;
    }
    let report = run_suite(&goldens, a.only.as_deref(), limits)?;
    out.write(&report.to_string())?;
    Ok(if report.failed() == 0 { Exit::Ok } else { Exit::Failure })
}

fn run_check(id: &str, g: &Goldens, l: &Limits) -> Result<Outcome> {
    match id {
        "star" => check_star(g, l),
        "g42" => check_g42(g, l),
        "binom5" => check_binom5(g, l),
        "kk1" => check_kk1(g, l),
        "cycle7" => check_cycle7(g, l),
        "fano-join" => check_fano_join(g, l),
        "pfactor" => check_pfactor(l),
        "family" => check_family(l),
        "sweep" => check_sweep(g, l),
        "sunflower" => check_sunflower(l),
        "duality" => check_duality(l),
        _ => unreachable!("check ids are validated by run_suite"),
    }
}

fn tau(h: &Hypergraph, m: usize, l: &Limits) -> Result<usize> {
    Ok(tau_int(h, m, l)?.0)
}

fn nu(h: &Hypergraph, m: usize, l: &Limits) -> Result<usize> {
    Ok(nu_int(h, m, l)?.0)
}

fn joined(parts: Vec<String>) -> String {
    parts.join("; ")
}

fn check_star(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let (mut exp, mut obs) = (Vec::new(), Vec::new());
    for n in [4usize, 6, 8] {
        let h = gen_star(n)?;
        let key = |s: &str| format!("star.{n}.{s}");
        exp.push(format!(
            "n={n}: tau={} nu={} tau*={}",
            g.int(&key("tau")),
            g.int(&key("nu")),
            g.int(&key("tau*"))
        ));
        obs.push(format!(
            "n={n}: tau={} nu={} tau*={}",
            tau(&h, 2, l)?,
            nu(&h, 2, l)?,
            format_value(&tau_star(&h, 2, l)?.value)
        ));
    }
    Ok(Outcome { expected: joined(exp), observed: joined(obs) })
}

fn check_g42(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let h = gen_g42_witness();
    let (c, _) = g42_cover(&h, l)?;
    let valid = if c.validate(&h)? { "valid" } else { "invalid" };
    Ok(Outcome {
        expected: format!("nu={} tau={} cover={} valid", g.int("g42.nu"), g.int("g42.tau"), g.int("g42.cover")),
        observed: format!("nu={} tau={} cover={} {valid}", nu(&h, 2, l)?, tau(&h, 2, l)?, c.size()),
    })
}

fn binom5_instances() -> Result<Vec<Hypergraph>> {
    let one = [Edge::parse("1 2 3")?];
    let two = [Edge::parse("1 2 3")?, Edge::parse("1 4 5")?];
    Ok(vec![gen_complete_subsets(5, 3, &one)?, gen_complete_subsets(5, 3, &two)?])
}

fn check_binom5(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let (mut exp, mut obs) = (Vec::new(), Vec::new());
    for (name, h) in ["minus one", "minus two"].into_iter().zip(binom5_instances()?) {
        exp.push(format!("{name}: nu={} tau={}", g.int("binom5.nu"), g.int("binom5.tau")));
        obs.push(format!("{name}: nu={} tau={}", nu(&h, 2, l)?, tau(&h, 2, l)?));
    }
    Ok(Outcome { expected: joined(exp), observed: joined(obs) })
}

fn check_kk1(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let (mut exp, mut obs) = (Vec::new(), Vec::new());
    for k in 3..=5usize {
        let h = gen_complete_subsets(k + 1, k, &[])?;
        let (c, _) = kk1_cover(&h, l)?;
        let t = g.int(&format!("kk1.{k}.tau"));
        exp.push(format!("k={k}: nu={} tau={t} cover={t} valid", g.int(&format!("kk1.{k}.nu"))));
        let valid = if c.validate(&h)? { "valid" } else { "invalid" };
        obs.push(format!(
            "k={k}: nu={} tau={} cover={} {valid}",
            nu(&h, k - 1, l)?,
            tau(&h, k - 1, l)?,
            c.size()
        ));
    }
    Ok(Outcome { expected: joined(exp), observed: joined(obs) })
}

fn check_cycle7(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let (h, _) = gen_tripartite_7cycle();
    let adj = derive(&h, 2)?.block_adjacency();
    let degree = if adj.iter().all(|n| n.len() == 2) { "2" } else { "mixed" };
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    while let Some(b) = stack.pop() {
        if !std::mem::replace(&mut seen[b], true) {
            stack.extend(adj[b].iter().copied());
        }
    }
    let connected = if seen.iter().all(|&s| s) { "connected" } else { "disconnected" };
    Ok(Outcome {
        expected: format!("nu={} tau={} blocks=7 degree=2 connected", g.int("cycle7.nu"), g.int("cycle7.tau")),
        observed: format!(
            "nu={} tau={} blocks={} degree={degree} {connected}",
            nu(&h, 2, l)?,
            tau(&h, 2, l)?,
            adj.len()
        ),
    })
}

fn fano_join() -> Result<mcover::families::Join> {
    let fano = gen_projective_plane(2)?.hypergraph;
    join(&[fano.clone(), fano])
}

fn check_fano_join(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let j = fano_join()?;
    let h = &j.hypergraph;
    let w = join_fractional_matching(&j)?;
    let values: BTreeSet<&Rat> = w.iter().map(|(_, v)| v).collect();
    let weight = match values.into_iter().collect::<Vec<_>>().as_slice() {
        [v] if w.len() == h.edge_count() => format_value(v),
        _ => "nonconstant".into(),
    };
    let feasible = if w.is_fractional_matching(&derive(h, 2)?) { "feasible" } else { "infeasible" };
    let total = g.get("fano-join.total");
    let lp = nu_star(h, 2, l)?.value;
    let lp_text = if lp >= total {
        format!("nu*>={}", format_value(&total))
    } else {
        format!("nu*={}", format_value(&lp))
    };
    Ok(Outcome {
        expected: format!(
            "edges={} nu={} weight={} total={} feasible nu*>={}",
            g.int("fano-join.edges"),
            g.int("fano-join.nu"),
            g.int("fano-join.weight"),
            format_value(&total),
            format_value(&total)
        ),
        observed: format!(
            "edges={} nu={} weight={weight} total={} {feasible} {lp_text}",
            h.edge_count(),
            nu(h, 2, l)?,
            format_value(&w.total())
        ),
    })
}

/// The seeded bipartite graphs of the p-factor check.
pub fn pfactor_graphs() -> Result<Vec<SimpleGraph>> {
    (0..PFACTOR_GRAPHS as u64)
        .map(|i| {
            let mut r = rng(0x5fac_0000 + i);
            let left = r.random_range(1..=5);
            let right = r.random_range(1..=5);
            let edges = r.random_range(0..=(left * right).min(12));
            gen_random_bipartite(left, right, edges, i)
        })
        .collect()
}

fn check_pfactor(l: &Limits) -> Result<Outcome> {
    let graphs = pfactor_graphs()?;
    let mut equal = 0;
    let mut first_miss = None;
    for (i, g) in graphs.iter().enumerate() {
        for p in 1..=3 {
            let flow = p_factor_max(g, p)?.len();
            let (z, _) = min_z_value(g, p, l)?;
            if flow == z {
                equal += 1;
            } else if first_miss.is_none() {
                first_miss = Some(format!(", first mismatch graph {i} p={p}: {flow} vs {z}"));
            }
        }
    }
    let total = 3 * graphs.len();
    Ok(Outcome {
        expected: format!("{total} of {total} equal"),
        observed: format!("{equal} of {total} equal{}", first_miss.unwrap_or_default()),
    })
}

/// The seeded tripartite instances of the family-model check, with the
/// class used as the family index.
pub fn family_instances() -> Result<Vec<(Hypergraph, mcover::PartiteStructure, usize)>> {
    (0..FAMILY_INSTANCES as u64)
        .map(|i| {
            let mut r = rng(0xfa31_0000 + i);
            let sizes: Vec<usize> = (0..3).map(|_| r.random_range(1..=3)).collect();
            let edges = r.random_range(1..=sizes.iter().product::<usize>().min(10));
            let (h, p) = gen_random_partite(&sizes, edges, i)?;
            Ok((h, p, i as usize % 3))
        })
        .collect()
}

fn check_family(l: &Limits) -> Result<Outcome> {
    let inst = family_instances()?;
    let mut agree = 0;
    let mut first_miss = None;
    for (i, (h, p, a)) in inst.iter().enumerate() {
        let f = to_family(h, p, *a)?;
        let pair = (family_nu2(&f, l)?.0, family_tau2(&f, l)?.0);
        let direct = (nu(h, 2, l)?, tau(h, 2, l)?);
        if pair == direct {
            agree += 1;
        } else if first_miss.is_none() {
            first_miss = Some(format!(", first mismatch instance {i}: {pair:?} vs {direct:?}"));
        }
    }
    let total = inst.len();
    Ok(Outcome {
        expected: format!("{total} of {total} agree"),
        observed: format!("{agree} of {total} agree{}", first_miss.unwrap_or_default()),
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sweep classes, each with its seeded instances and the order `m` they are solved at.
pub const SWEEP_CLASSES: [&str; 5] = ["3-uniform", "k-uniform", "cover45", "mimic", "two-family"];

/// Instance `i` of a sweep class.
pub fn sweep_instance(class: &str, i: usize) -> Result<(Hypergraph, Option<mcover::PartiteStructure>, usize)> {
    let tag = SWEEP_CLASSES.iter().position(|c| *c == class).expect("known sweep class") as u64;
    let seed = (tag << 32) + i as u64;
    let mut r = rng(0x5eed_0000_0000 ^ seed);
    match class {
        "3-uniform" => {
            let n = r.random_range(5..=7);
            let e = r.random_range(1..=binomial(n, 3).min(12));
            Ok((gen_random(3, n, e, seed)?, None, 2))
        }
        "k-uniform" => {
            let k = 3 + i % 3;
            let n = k + r.random_range(1..=3);
            let e = r.random_range(1..=binomial(n, k).min(10));
            Ok((gen_random(k, n, e, seed)?, None, k - 1))
        }
        "cover45" => {
            let n = r.random_range(6..=8);
            let e = r.random_range(1..=binomial(n, 4).min(12));
            Ok((gen_random(4, n, e, seed)?, None, 2))
        }
        "mimic" | "two-family" => {
            let mut sizes: Vec<usize> = (0..3).map(|_| r.random_range(1..=3)).collect();
            if class == "two-family" {
                sizes[0] = 2;
            }
            let e = r.random_range(1..=sizes.iter().product::<usize>().min(10));
            let (h, p) = gen_random_partite(&sizes, e, seed)?;
            Ok((h, Some(p), 2))
        }
        _ => unreachable!("sweep classes are fixed"),
    }
}

/// Checks one sweep instance; `Ok(None)` when every inequality holds,
/// otherwise a description of the violation.
fn sweep_one(class: &str, i: usize, g: &Goldens, l: &Limits) -> Result<Option<String>> {
    let (h, p, m) = sweep_instance(class, i)?;
    let nu_r = rat_int(nu(&h, m, l)? as i64);
    let fail = |what: &str| Ok(Some(format!("{class} #{i}: {what}")));
    match class {
        "3-uniform" => {
            let t = rat_int(tau(&h, 2, l)? as i64);
            if t > g.get("sweep.ratio3") * &nu_r {
                return fail("tau exceeds ratio bound");
            }
            if t >= g.get("sweep.gap3") * tau_star(&h, 2, l)?.value {
                return fail("tau not below 2 tau*");
            }
        }
        "k-uniform" => {
            let k = h.uniformity();
            if tau_star(&h, m, l)?.value > rat_int(k as i64 - 1) * &nu_r {
                return fail("tau* exceeds (k-1) nu");
            }
        }
        "cover45" => {
            let (_, matching, _) = nu_int(&h, 2, l)?;
            let (w, _) = cover45(&h, &matching.edges, l)?;
            if !w.is_fractional_cover(&derive(&h, 2)?) {
                return fail("cover infeasible");
            }
            if w.total() > g.get("sweep.cover45") * &nu_r {
                return fail("cover total exceeds bound");
            }
        }
        "mimic" => {
            let (w, _) = mimic_cover(&h, p.as_ref().expect("partite"), l)?;
            if !w.is_fractional_cover(&derive(&h, 2)?) {
                return fail("cover infeasible");
            }
            if w.total() > g.get("sweep.mimic") * &nu_r {
                return fail("cover total exceeds bound");
            }
        }
        "two-family" => {
            let f = to_family(&h, p.as_ref().expect("partite"), 0)?;
            let (c, t) = tunu_construct(&f, l)?;
            let oracle = family_tau2(&f, l)?.0;
            let pairs = c.to_pairs(&f)?;
            if !c.validate(&f) || !is_m_cover(&h, &pairs, 2)? {
                return fail("family cover invalid");
            }
            if oracle > c.size() || rat_int(c.size() as i64) > g.get("sweep.tunu") * rat_int(t.nu as i64) {
                return fail("family cover exceeds bound");
            }
        }
        _ => unreachable!("sweep classes are fixed"),
    }
    Ok(None)
}

fn check_sweep(g: &Goldens, l: &Limits) -> Result<Outcome> {
    let (mut exp, mut obs) = (Vec::new(), Vec::new());
    let mut first_fail = None;
    for class in SWEEP_CLASSES {
        let mut ok = 0;
        for i in 0..SWEEP_PER_CLASS {
            match sweep_one(class, i, g, l) {
                Ok(None) => ok += 1,
                Ok(Some(msg)) => {
                    first_fail.get_or_insert(msg);
                }
                Err(e) => {
                    first_fail.get_or_insert(format!("{class} #{i}: {e}"));
                }
            }
        }
        exp.push(format!("{class} {SWEEP_PER_CLASS}/{SWEEP_PER_CLASS}"));
        obs.push(format!("{class} {ok}/{SWEEP_PER_CLASS}"));
    }
    let mut observed = joined(obs);
    if let Some(f) = first_fail {
        observed.push_str(&format!("; first failure {f}"));
    }
    Ok(Outcome { expected: joined(exp), observed })
}

/// Instance `i` of the sunflower check: every edge meets a core of `m + 1`
/// vertices in at least `m` of them, with a sunflower of at least `k + 1`
/// petals on the full core and random extra edges kept only while the
/// instance stays m-intersecting.
pub fn sunflower_instance(i: usize) -> Result<(Hypergraph, usize)> {
    let m = 2 + i % 2;
    let k = m + 3;
    let mut r = rng(0x5f10_0000 + i as u64);
    let core: Vec<String> = (1..=m + 1).map(|v| v.to_string()).collect();
    let petals = k + 1 + i % 3;
    let mut edges = Vec::new();
    let mut pool = Vec::new();
    for j in 1..=petals {
        let fresh = [format!("x{j}"), format!("y{j}")];
        pool.extend(fresh.iter().cloned());
        edges.push(Edge::new(core.iter().chain(&fresh).map(String::as_str))?);
    }
    for _ in 0..12 {
        let skip = r.random_range(0..core.len());
        let mut toks: Vec<String> = core.iter().enumerate().filter(|(c, _)| *c != skip).map(|(_, v)| v.clone()).collect();
        while toks.len() < k {
            let v = pool[r.random_range(0..pool.len())].clone();
            if !toks.contains(&v) {
                toks.push(v);
            }
        }
        let e = Edge::new(toks.iter().map(String::as_str))?;
        if !edges.contains(&e) && edges.iter().all(|f| f.intersection_len(&e) >= m) {
            edges.push(e);
        }
    }
    Ok((Hypergraph::from_edges(k, edges)?, m))
}

fn check_sunflower(l: &Limits) -> Result<Outcome> {
    let mut ok = 0;
    let mut first_fail = None;
    for i in 0..SUNFLOWER_INSTANCES {
        let (h, m) = sunflower_instance(i)?;
        let Some(w) = sunflower_find(&h, m, l)? else {
            first_fail.get_or_insert(format!(", instance {i}: no sunflower found"));
            continue;
        };
        let c = sunflower_compress(&h, &w, l)?;
        let (before, after) = (tau_star(&h, m, l)?.value, tau_star(&c, m, l)?.value);
        if after >= before {
            ok += 1;
        } else {
            first_fail.get_or_insert(format!(
                ", instance {i}: {} drops to {}",
                format_value(&before),
                format_value(&after)
            ));
        }
    }
    Ok(Outcome {
        expected: format!("{SUNFLOWER_INSTANCES} of {SUNFLOWER_INSTANCES} monotone"),
        observed: format!("{ok} of {SUNFLOWER_INSTANCES} monotone{}", first_fail.unwrap_or_default()),
    })
}

/// Every hypergraph the other checks solve, with its order, deduplicated.
pub fn suite_instances(l: &Limits) -> Result<Vec<(Hypergraph, usize)>> {
    let mut all: Vec<(Hypergraph, usize)> = Vec::new();
    for n in [4, 6, 8] {
        all.push((gen_star(n)?, 2));
    }
    all.push((gen_g42_witness(), 2));
    all.extend(binom5_instances()?.into_iter().map(|h| (h, 2)));
    for k in 3..=5 {
        all.push((gen_complete_subsets(k + 1, k, &[])?, k - 1));
    }
    all.push((gen_tripartite_7cycle().0, 2));
    all.push((fano_join()?.hypergraph, 2));
    for g in pfactor_graphs()? {
        if g.edge_count() > 0 {
            let edges = g.edges().iter().map(|(a, b)| Edge::new([a.clone(), b.clone()]));
            all.push((Hypergraph::from_edges(2, edges.collect::<Result<Vec<_>>>()?)?, 1));
        }
    }
    all.extend(family_instances()?.into_iter().map(|(h, _, _)| (h, 2)));
    for class in SWEEP_CLASSES {
        for i in 0..SWEEP_PER_CLASS {
            let (h, _, m) = sweep_instance(class, i)?;
            all.push((h, m));
        }
    }
    for i in 0..SUNFLOWER_INSTANCES {
        let (h, m) = sunflower_instance(i)?;
        if let Some(w) = sunflower_find(&h, m, l)? {
            all.push((sunflower_compress(&h, &w, l)?, m));
        }
        all.push((h, m));
    }
    let mut seen = BTreeSet::new();
    all.retain(|(h, m)| seen.insert((h.uniformity(), *m, h.edges().to_vec())));
    Ok(all)
}

fn check_duality(l: &Limits) -> Result<Outcome> {
    let inst = suite_instances(l)?;
    let mut ok = 0;
    let mut first_fail = None;
    for (i, (h, m)) in inst.iter().enumerate() {
        let ts = tau_star(h, *m, l)?;
        let ns = nu_star(h, *m, l)?;
        let d = derive(h, *m)?;
        let holds = ts.value == ns.value
            && ts.cover.total() == ts.value
            && ns.matching.total() == ns.value
            && ts.cover.is_fractional_cover(&d)
            && ns.matching.is_fractional_matching(&d)
            && check_slackness(&ts.cover, &ts.matching, &d)?
            && check_slackness(&ns.cover, &ns.matching, &d)?;
        if holds {
            ok += 1;
        } else {
            first_fail.get_or_insert(format!(", first failure instance {i}"));
        }
    }
    let total = inst.len();
    Ok(Outcome {
        expected: format!("{total} of {total} instances"),
        observed: format!("{ok} of {total} instances{}", first_fail.unwrap_or_default()),
    })
}
