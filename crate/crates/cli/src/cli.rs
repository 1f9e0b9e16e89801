use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mcover", version, about = "m-covers and m-matchings of uniform hypergraphs")]
pub struct Cli {
    /// Read the instance from this file instead of stdin.
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Write to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Maximum nonzeros in any LP (overrides MCOVER_LIMITS).
    #[arg(long, global = true, value_name = "N")]
    pub limit_nonzeros: Option<usize>,
    /// Print the analysis trace as comment lines.
    #[arg(long, global = true)]
    pub trace: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate an instance of a named family.
    Gen(GenArgs),
    /// Write the derived system H^(m) in the instance format.
    Derive(DeriveArgs),
    /// Compute tau, nu, tau* or nu* of order m with a certificate.
    Solve(SolveArgs),
    /// Run a constructive cover procedure.
    Construct(ConstructArgs),
    /// Run the reproduction suite.
    Verify(VerifyArgs),
    /// Search for instances with a large tau/nu ratio.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// star, complete, plane, join, g42, cycle7, random, random-partite.
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub parts: Option<usize>,
    #[arg(long)]
    pub edges: Option<usize>,
    /// Partite class sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<usize>,
    /// Edge to remove (`complete`), comma or space separated; repeatable.
    #[arg(long)]
    pub remove: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct DeriveArgs {
    #[arg(short = 'm')]
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Tau,
    Nu,
    TauStar,
    NuStar,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub what: What,
    #[arg(short = 'm')]
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Procedure {
    /// 2-cover of a 2-intersecting hypergraph from two edges.
    TwoEdge,
    /// Fractional 2-cover of total at most k^2/4 + k - 2.
    Gstar,
    /// 2-cover of size 4 of a 4-uniform 2-intersecting hypergraph.
    G42,
    /// (k-1)-cover of size ceil((k+1)/2).
    Kk1,
    /// Fractional 2-cover of a 4-uniform hypergraph from a maximum 2-matching.
    Cover45,
    /// 2-cover of size |U|/2 by local search on a bipartition.
    Crossing,
    /// Find a sunflower and compress it.
    Sunflower,
    /// Family cover of two edge families (tripartite, one class of size 2).
    Tunu,
    /// Fractional cover of a k-partite hypergraph by mimicking edges.
    Mimic,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub procedure: Procedure,
    /// Order for `sunflower`.
    #[arg(short = 'm', default_value_t = 2)]
    pub m: usize,
    /// Pair set U for `crossing`, one pair per line (default: all pairs inside edges).
    #[arg(long, value_name = "PATH")]
    pub pairs: Option<PathBuf>,
    /// Class used as the family index for `tunu` (default: the first class of size 2).
    #[arg(long)]
    pub class: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::Paper)]
    pub suite: Suite,
    /// Run a single check.
    #[arg(long, value_name = "CHECK")]
    pub only: Option<String>,
    /// File of `key = value` lines overriding expected values.
    #[arg(long, value_name = "PATH")]
    pub goldens: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short = 'k', default_value_t = 3)]
    pub k: usize,
    #[arg(short = 'm', default_value_t = 2)]
    pub m: usize,
    #[arg(short = 'n', default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 1000)]
    pub iters: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of hill-climbing restarts sharing the iteration budget.
    #[arg(long, default_value_t = 4)]
    pub restarts: usize,
    /// Enumerate every instance on n vertices instead (small n and k only).
    #[arg(long)]
    pub exhaustive: bool,
}
