use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dstab_core::simplicial::Field;

#[derive(Debug, Parser)]
#[command(name = "dstab", version, about = "Depth stability of powers of edge ideals")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest vertex / variable count the exhaustive routines accept.
    #[arg(long, global = true, default_value_t = 10)]
    pub max_r: usize,
    #[arg(long, global = true, default_value_t = 64)]
    pub max_power: usize,
    /// Largest degree box the scans may walk.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub max_box: usize,
    /// Worker threads for the depth scan; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Run the slower independent checks as well.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Write intermediate states to stderr as JSON lines.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DstabMethod {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AssMethod {
    Formula,
    Bruteforce,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Components, bipartitions, cycle data and the global bound.
    Analyze { file: PathBuf },
    /// Index of depth stability.
    Dstab {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DstabMethod::Formula)]
        method: DstabMethod,
    },
    /// Depths of the first powers.
    DepthSeq {
        file: PathBuf,
        #[arg(long = "max", default_value_t = 4)]
        max: usize,
    },
    /// Associated primes of a power.
    Ass {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, value_enum, default_value_t = AssMethod::Formula)]
        method: AssMethod,
    },
    /// Reduced homology of a facet list, or of a degree complex of a graph.
    Homology {
        file: PathBuf,
        /// Treat the file as a graph and use its independence complex.
        #[arg(long)]
        graph: bool,
        /// With `--graph`: comma-separated degree for the complex of a power.
        #[arg(long, requires = "graph", allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, requires = "graph", default_value_t = 1)]
        power: usize,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}
