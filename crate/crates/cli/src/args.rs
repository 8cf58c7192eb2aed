use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cayley",
    version,
    about = "Exact counts, enumeration, sampling and identity checks for labeled trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact tree count.
    Count {
        #[command(subcommand)]
        subject: CountSubject,
    },
    /// Stream labeled trees in a deterministic order.
    Enumerate(EnumerateArgs),
    /// Convert between edge lists and Prüfer sequences on standard input.
    Prufer {
        #[command(subcommand)]
        direction: PruferDirection,
    },
    /// Draw seeded uniform samples of trees.
    Sample(SampleArgs),
    /// Check the counting identities against brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum CountSubject {
    /// Trees on n labeled vertices.
    Total {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
    },
    /// Trees with the given degree of each vertex, in vertex order.
    Degrees {
        #[arg(short = 'd', long = "degrees", value_parser = parse_list)]
        degrees: DegreeList,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
    },
    /// Trees in which vertex 1 has degree k; every k when omitted.
    Degv1 {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = CountFormat::Text)]
        format: CountFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Edges,
    Prufer,
    Json,
    Csv,
}

/// A comma-separated list of positive integers, e.g. `2,2,1,1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeList(pub Vec<usize>);

fn parse_list(s: &str) -> Result<DegreeList, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("not a nonnegative integer: {part:?}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(DegreeList)
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(short = 'n')]
    pub n: usize,
    /// Only trees with exactly these vertex degrees.
    #[arg(long, value_parser = parse_list)]
    pub degrees: Option<DegreeList>,
    /// Only trees in which vertex 1 has this degree.
    #[arg(long = "deg-v1")]
    pub deg_v1: Option<usize>,
    #[arg(long, value_enum, default_value_t = TreeFormat::Edges)]
    pub format: TreeFormat,
    /// Finish with a line giving the number of trees written.
    #[arg(long)]
    pub count: bool,
    /// Stop after this many trees.
    #[arg(long)]
    pub limit: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum PruferDirection {
    /// Edge lists in, one Prüfer sequence per tree out.
    Encode {
        #[arg(long, value_enum, default_value_t = TreeFormat::Prufer)]
        format: TreeFormat,
    },
    /// Prüfer sequences in (one per line), edge lists out.
    Decode {
        /// Vertex count; inferred as length + 2 when omitted.
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = TreeFormat::Edges)]
        format: TreeFormat,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("shape").required(true).args(["n", "degrees"])))]
pub struct SampleArgs {
    #[arg(short = 'n')]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_list)]
    pub degrees: Option<DegreeList>,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = TreeFormat::Edges)]
    pub format: TreeFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    All,
    Theorem1,
    DegV1Totality,
    Lemma1,
    Recursion,
    Collapse,
    DoubleCount,
    L3,
    Supervertex,
    Prufer,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: VerifyTarget,
    /// Upper size limit for every selected check.
    #[arg(long = "max-n", env = "CAYLEY_MAX_N")]
    pub max_n: Option<usize>,
    /// Print one JSON document instead of the table.
    #[arg(long)]
    pub json: bool,
    /// Swap in a deliberately wrong formula for the given identity.
    #[arg(long = "inject-fault", hide = true)]
    pub inject_fault: Option<String>,
}
