//! Command-line argument surface.
//!
//! Probabilities are accepted only as exact rational strings such as
//! `"9/20"` — never floats — so closed-form outputs stay exact.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "morsewalk",
    version,
    about = "Random lattice walks and the surface invariants they encode",
    long_about = "Random walks on the quarter lattice {(x, y): x >= 1, y >= 0} started at \
                  (1, 0) with Right/Left/Diagonal steps, their closed-form statistics, \
                  exhaustive catalogs, the walk intersection graph, dominating sets, and \
                  SVG diagrams.\n\n\
                  Exit codes: 0 success, 2 precondition or usage error, 3 resource-cap \
                  error, 4 internal invariant violation. Failures print a JSON object \
                  with an \"error\" field to stdout."
)]
pub struct Cli {
    /// RNG seed for randomized subcommands (fallback: $MORSEWALK_SEED, then 0).
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,

    /// Worker threads for Monte-Carlo estimation (0 = one per core).
    /// Results are aggregation-order independent, so this never changes output.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    pub threads: usize,

    /// Write the artifact to FILE instead of stdout (error JSON stays on stdout).
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

/// The three step probabilities; must be positive rationals summing to 1.
#[derive(Args, Debug)]
pub struct ProbArgs {
    /// Right-step probability as an exact rational, e.g. "9/20".
    #[arg(long, value_name = "P/Q")]
    pub pr: String,

    /// Left-step probability as an exact rational, e.g. "1/20".
    #[arg(long, value_name = "P/Q")]
    pub pl: String,

    /// Diagonal-step probability as an exact rational, e.g. "1/2".
    #[arg(long, value_name = "P/Q")]
    pub pd: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Random sampling at the first-moment density, retried until the
    /// closed-form size bound is met.
    Prob,
    /// Deterministic largest-gain greedy cover.
    Greedy,
    /// Exact minimum via branch and bound (small graphs only).
    Exact,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Draw completed walks step by step (censored if max-steps elapse first).
    Simulate {
        #[command(flatten)]
        probs: ProbArgs,

        /// Number of independent walks to draw (trial i uses RNG stream i).
        #[arg(long, default_value_t = 1)]
        trials: u64,

        /// In-domain step cap per walk before the trial is censored.
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: usize,
    },

    /// Closed-form expectations, optionally beside Monte-Carlo estimates.
    /// Precondition: p_l + p_d > p_r (positive exit drift), else exit 2.
    Moments {
        #[command(flatten)]
        probs: ProbArgs,

        /// Monte-Carlo trials (0 = closed forms only).
        #[arg(long, default_value_t = 0)]
        trials: u64,

        /// In-domain step cap per trial before censoring.
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: usize,
    },

    /// Exact distribution tables: walk-length law, or length law at a fixed genus.
    Dist {
        #[command(flatten)]
        probs: ProbArgs,

        /// Largest walk length tabulated; must be even.
        #[arg(long, default_value_t = 20, value_name = "EVEN")]
        max_n: u64,

        /// Tabulate the joint law restricted to this genus instead.
        #[arg(long)]
        genus: Option<u64>,

        /// json (default) or csv.
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },

    /// Catalog every completed walk with at most max-crit critical points.
    Enumerate {
        /// Genus (terminal height) of the cataloged walks.
        #[arg(long)]
        genus: u64,

        /// Critical-point budget; walks have length at most max-crit - 2.
        /// Precondition: max-crit >= 2 * genus + 2 and even.
        #[arg(long)]
        max_crit: u64,

        /// Emit only {"count": "..."} instead of the walk listing.
        #[arg(long)]
        count_only: bool,

        /// Catalog-size cap; larger catalogs exit 3 before generation.
        #[arg(long, default_value_t = 10_000_000)]
        cap: u64,
    },

    /// Build the walk intersection graph and report its degrees.
    /// Exits 4 with a counterexample if the minimum degree falls below the
    /// asserted bound (default: the genus-indexed Catalan number minus one).
    Graph {
        /// Genus of the cataloged walks; must be at least 2.
        #[arg(long)]
        genus: u64,

        /// Critical-point budget; precondition max-crit >= 2 * genus + 2.
        #[arg(long)]
        max_crit: u64,

        /// Vertex-count cap; larger graphs exit 3 before construction.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,

        /// Also write an edge list ("i j" per line, i < j) to FILE.
        #[arg(long, value_name = "FILE")]
        edge_list: Option<PathBuf>,

        /// Omit per-vertex adjacency lists from the JSON artifact.
        #[arg(long)]
        summary: bool,

        /// Override the asserted minimum-degree bound.
        #[arg(long, value_name = "BOUND")]
        assert_min_degree: Option<usize>,
    },

    /// Construct a verified dominating set of the walk intersection graph.
    Domset {
        /// Genus of the cataloged walks; must be at least 2.
        #[arg(long)]
        genus: u64,

        /// Critical-point budget; precondition max-crit >= 2 * genus + 2.
        #[arg(long)]
        max_crit: u64,

        /// Vertex-count cap; larger graphs exit 3 before construction.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,

        /// prob (seeded sampling), greedy, or exact (<= 30 vertices).
        #[arg(long, value_enum, default_value_t = Method::Prob)]
        method: Method,

        /// Sampling attempts allowed for --method prob before exit 3.
        #[arg(long, default_value_t = 50)]
        max_attempts: u64,
    },

    /// Render walks as a deterministic SVG diagram.
    /// All drawn walks must share one genus; mixed inputs exit 2.
    Render {
        /// Walk step string such as "RRDRRDLLRD"; repeatable.
        #[arg(long = "walk", value_name = "STEPS")]
        walks: Vec<String>,

        /// Overlay the full catalog of this genus (requires --max-crit).
        #[arg(long)]
        genus: Option<u64>,

        /// Critical-point budget for the catalog overlay.
        #[arg(long)]
        max_crit: Option<u64>,

        /// Index of the walk drawn bold: catalog walks first, then --walk
        /// strings. Default: the only --walk string, when exactly one is given.
        #[arg(long)]
        highlight: Option<usize>,

        /// Circle lattice points shared by at least two walks at heights
        /// strictly between 0 and the genus.
        #[arg(long)]
        mark_shared: bool,
    },
}
