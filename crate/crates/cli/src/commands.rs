use std::collections::BTreeSet;

use mcover::families::GenSpec;
use mcover::hypercore::derive as derive_system;
use mcover::intsolve::{nu_int, tau_int, SearchStats};
use mcover::proofcraft::{
    cover45, crossing_partition_cover, g42_cover, gstar_upper_cover, kk1_cover, mimic_cover, sunflower_compress,
    sunflower_find, to_family, tunu_construct, two_edge_cover,
};
use mcover::ratlp::{format_ratio, nu_star, tau_star};
use mcover::{Edge, Error, Hypergraph, Instance, Limits, Result};

use crate::cli::{Cli, ConstructArgs, DeriveArgs, GenArgs, Procedure, SolveArgs, What};
use crate::io::{read_instance, read_text, Output};
use crate::Exit;

pub fn gen_spec(a: &GenArgs) -> Result<GenSpec> {
    let mut spec = GenSpec::new(&a.family);
    let named = [("n", a.n), ("k", a.k), ("q", a.q), ("parts", a.parts), ("edges", a.edges)];
    for (key, value) in named {
        if let Some(v) = value {
            spec = spec.param(key, v);
        }
    }
    spec.classes = a.classes.clone();
    spec.removed = a
        .remove
        .iter()
        .map(|r| Edge::new(r.split([',', ' ']).filter(|t| !t.is_empty())))
        .collect::<Result<_>>()?;
    spec.seed = a.seed;
    Ok(spec)
}

pub fn gen(a: &GenArgs, out: &mut Output) -> Result<Exit> {
    let spec = gen_spec(a)?;
    let inst = spec.generate()?;
    out.write(&inst.to_text(&[format!("gen {spec}")]))?;
    Ok(Exit::Ok)
}

/// The derived system as an instance: one line per block, listing the
/// comma-joined m-sets of the edge.
pub fn derived_instance(h: &Hypergraph, m: usize) -> Result<Hypergraph> {
    let d = derive_system(h, m)?;
    let blocks = d
        .blocks()
        .iter()
        .map(|b| Edge::new(b.iter().map(|&g| d.ground()[g].key())))
        .collect::<Result<Vec<_>>>()?;
    let width = blocks.first().map_or(1, Edge::len);
    Hypergraph::from_edges(width, blocks)
}

pub fn derive(cli: &Cli, a: &DeriveArgs, out: &mut Output) -> Result<Exit> {
    let inst = read_instance(cli.input.as_deref())?;
    let d = derived_instance(&inst.hypergraph, a.m)?;
    out.write(&Instance::plain(d).to_text(&[format!("derived system of order {}", a.m)]))?;
    Ok(Exit::Ok)
}

fn stats_text(stats: &SearchStats) -> String {
    format!(
        "nodes = {}\nlower bound = {}\nincumbent sizes = {}",
        stats.nodes,
        stats.lower_bound,
        stats.bound_trace.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    )
}

pub fn solve(cli: &Cli, a: &SolveArgs, limits: &Limits, out: &mut Output) -> Result<Exit> {
    let h = read_instance(cli.input.as_deref())?.hypergraph;
    let m = a.m;
    match a.what {
        What::Tau => {
            let (t, cert, stats) = tau_int(&h, m, limits)?;
            out.line(&format!("tau^({m}) = {t}"))?;
            if cli.trace {
                out.comment(&stats_text(&stats))?;
            }
            out.write(&cert.to_text())?;
        }
        What::Nu => {
            let (n, cert, stats) = nu_int(&h, m, limits)?;
            out.line(&format!("nu^({m}) = {n}"))?;
            if cli.trace {
                out.comment(&stats_text(&stats))?;
            }
            out.write(&cert.to_text())?;
        }
        What::TauStar | What::NuStar => {
            let (name, opt) = if a.what == What::TauStar {
                ("tau*", tau_star(&h, m, limits)?)
            } else {
                ("nu*", nu_star(&h, m, limits)?)
            };
            out.line(&format!("{name}^({m}) = {}", format_ratio(&opt.value)))?;
            let (cert, other) = if a.what == What::TauStar {
                (&opt.cover, &opt.matching)
            } else {
                (&opt.matching, &opt.cover)
            };
            if cli.trace {
                out.comment(&format!("dual certificate of total {}", format_ratio(&other.total())))?;
                out.comment(&other.to_text())?;
            }
            out.write(&cert.to_text())?;
        }
    }
    Ok(Exit::Ok)
}

/// Pairs for `crossing`: one pair per line, tokens separated by spaces or
/// commas, optionally followed by a weight which is ignored.
fn read_pairs(text: &str) -> Result<Vec<Edge>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let toks: Vec<&str> = l.split([',', ' ', '\t']).filter(|t| !t.is_empty()).take(2).collect();
            Edge::new(toks)
        })
        .collect()
}

pub fn construct(cli: &Cli, a: &ConstructArgs, limits: &Limits, out: &mut Output) -> Result<Exit> {
    let inst = read_instance(cli.input.as_deref())?;
    let h = &inst.hypergraph;
    let partite = || {
        inst.partite
            .as_ref()
            .ok_or_else(|| Error::Parameter("this procedure needs `@class` lines in the input".into()))
    };
    let (summary, trace, body) = match a.procedure {
        Procedure::TwoEdge => {
            let (c, t) = two_edge_cover(h, limits)?;
            (format!("2-cover of size {} (bound {})", c.size(), t.bound), t.to_string(), c.to_text())
        }
        Procedure::Gstar => {
            let (w, t) = gstar_upper_cover(h, limits)?;
            let s = format!("fractional 2-cover of total {} (bound {})", format_ratio(&t.total), format_ratio(&t.bound));
            (s, t.to_string(), w.to_text())
        }
        Procedure::G42 => {
            let (c, t) = g42_cover(h, limits)?;
            (format!("2-cover of size {}", c.size()), t.to_string(), c.to_text())
        }
        Procedure::Kk1 => {
            let (c, t) = kk1_cover(h, limits)?;
            (format!("{}-cover of size {}", h.uniformity() - 1, c.size()), t.to_string(), c.to_text())
        }
        Procedure::Cover45 => {
            let (_, matching, _) = nu_int(h, 2, limits)?;
            let (w, t) = cover45(h, &matching.edges, limits)?;
            let s = format!("fractional 2-cover of total {} (bound {})", format_ratio(&t.total), format_ratio(&t.bound));
            (s, t.to_string(), w.to_text())
        }
        Procedure::Crossing => {
            let u = match &a.pairs {
                Some(p) => read_pairs(&read_text(Some(p))?)?,
                None => h
                    .edges()
                    .iter()
                    .flat_map(|e| e.subsets(2))
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect(),
            };
            let (c, t) = crossing_partition_cover(h, &u)?;
            (format!("2-cover of size {} from {} pairs", c.size(), u.len()), t.to_string(), c.to_text())
        }
        Procedure::Sunflower => match sunflower_find(h, a.m, limits)? {
            Some(w) => {
                let k = sunflower_compress(h, &w, limits)?;
                let s = format!("sunflower with {} petals compressed to {} edges", w.petals.len(), k.edge_count());
                (s, w.to_string(), Instance::plain(k).to_text(&[]))
            }
            None => ("no sunflower found".to_string(), String::new(), inst.to_text(&[])),
        },
        Procedure::Tunu => {
            let p = partite()?;
            let a_class = match &a.class {
                Some(name) => p
                    .classes()
                    .iter()
                    .position(|(n, _)| n == name)
                    .ok_or_else(|| Error::Parameter(format!("no class named {name}")))?,
                None => p
                    .classes()
                    .iter()
                    .position(|(_, c)| c.len() == 2)
                    .ok_or_else(|| Error::Parameter("no class of size 2".into()))?,
            };
            let f = to_family(h, p, a_class)?;
            let (c, t) = tunu_construct(&f, limits)?;
            let pairs = c.to_pairs(&f)?;
            let body: String = pairs.iter().map(|e| format!("{} 1/1\n", e.key())).collect();
            (format!("2-cover of size {} (nu = {})", c.size(), t.nu), t.to_string(), body)
        }
        Procedure::Mimic => {
            let (w, t) = mimic_cover(h, partite()?, limits)?;
            let s = format!("fractional cover of total {} (bound {})", format_ratio(&w.total()), format_ratio(&t.bound));
            (s, t.to_string(), w.to_text())
        }
    };
    out.comment(&summary)?;
    if cli.trace {
        out.comment(&trace)?;
    }
    out.write(&body)?;
    Ok(Exit::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcover::families::gen_star;

    #[test]
    fn derived_instance_has_one_line_per_edge() {
        let h = gen_star(6).unwrap();
        let d = derived_instance(&h, 2).unwrap();
        assert_eq!(d.edge_count(), h.edge_count());
        assert_eq!(d.uniformity(), 3);
        assert!(d.vertices().iter().all(|v| v.as_str().contains(',')));
    }

    #[test]
    fn pairs_file_accepts_weights_and_spaces() {
        let pairs = read_pairs("# U\n1,2 1/4\n3 4\n\n").unwrap();
        assert_eq!(pairs, vec![Edge::parse("1 2").unwrap(), Edge::parse("3 4").unwrap()]);
    }

    #[test]
    fn gen_flags_become_a_spec() {
        let a = GenArgs {
            family: "complete".into(),
            n: Some(5),
            k: Some(3),
            q: None,
            parts: None,
            edges: None,
            classes: vec![],
            remove: vec!["1,2,3".into(), "1 4 5".into()],
            seed: None,
        };
        let spec = gen_spec(&a).unwrap();
        assert_eq!(spec.to_string(), "complete k=3 n=5 remove=1,2,3 remove=1,4,5");
        assert_eq!(spec.generate().unwrap().hypergraph.edge_count(), 8);
    }
}
