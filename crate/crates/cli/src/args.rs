use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "stabilitylab", version, about = "Independence-number stability of graphs")]
pub struct Cli {
    /// Indent the final JSON report.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A graph given as graph6 text or as a file. The file may hold graph6 text
/// or the JSON printed by `construct`; `-` reads standard input.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    #[arg(long)]
    pub g6: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

/// Optional graph for the families built from a base graph.
#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
pub struct BaseInput {
    /// Base graph (cone, isolift).
    #[arg(long)]
    pub g6: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Parallel {
    /// Worker threads; 0 uses every available core.
    #[arg(long, env = "STABILITYLAB_JOBS", default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Independence number with a maximum independent set.
    Alpha {
        #[command(flatten)]
        input: GraphInput,
    },
    /// (k,l)-stability with the first violating k-set.
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Exit 2 unless the graph is tight.
        #[arg(long)]
        tight: bool,
    },
    /// Greedy α-critical spanning kernel.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
    },
    /// With --k: the certificate of a tight (k,0)-stable graph. Without:
    /// the defect class of a connected α-critical graph.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Builds a graph of one of the standard families.
    Construct(ConstructArgs),
    /// All graphs on n vertices passing the filters, as atlas records.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Predicates such as connected, min-degree=3, alpha-critical,
        /// defect=2, stable=2,0, tight=3,0. Repeatable.
        #[arg(long = "filter")]
        filters: Vec<String>,
        /// Cut partial graphs that cannot grow into a tight (k,0) match.
        #[arg(long)]
        prune: bool,
        /// Write records here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Exhaustive check of a theorem over a range of orders.
    Verify {
        /// T1a, T1b, T1c, T1d, T2, COR, L21, AND or SUR.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Only for COR (default 3).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        prune: bool,
        /// Allow order 10.
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        max_graphs: Option<u64>,
        /// Write match records here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Do not emit match records.
        #[arg(long)]
        no_records: bool,
        #[command(flatten)]
        parallel: Parallel,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Clique,
    Cone,
    Union,
    Isolift,
    BipartitePm,
    EvensubK4,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Order for cycle and clique.
    #[arg(long)]
    pub n: Option<usize>,
    /// Side size for bipartite-pm.
    #[arg(long)]
    pub m: Option<usize>,
    /// Probability of each extra cross edge for bipartite-pm.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Seed for bipartite-pm.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Six even internal-vertex counts for evensub-k4.
    #[arg(long, value_delimiter = ',')]
    pub counts: Vec<usize>,
    /// Number of isolated vertices for isolift.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Comma-separated graph6 parts for union.
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<String>,
    #[command(flatten)]
    pub base: BaseInput,
}
