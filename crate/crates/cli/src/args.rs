use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "degree-indices", version, about = "Degree-based topological indices of DW_n and H_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of a family member.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute index values by edge summation and/or closed form.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Index name or `all`.
        #[arg(long, default_value = "all")]
        index: String,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        #[arg(long, default_value = "proof-derived")]
        variant: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the edge partition by degree or neighbor-degree-sum pairs.
    Partition {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "degree")]
        mode: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check closed forms against edge sums and write a report.
    Verify {
        /// `dw`, `hanoi` or `all`.
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long)]
        n_min: Option<u32>,
        #[arg(long)]
        n_max: Option<u32>,
        /// Comma-separated index names or `all`.
        #[arg(long, default_value = "all")]
        index: String,
        #[arg(long, default_value = "proof-derived")]
        variant: String,
        #[arg(long, default_value_t = degree_indices::verify::DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Report file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List known discrepancies in the published formulas and tables.
    Errata {
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// A family member (`--family` with `--n`) or an edge-list file (`--edges`).
#[derive(Debug, Args)]
pub struct Source {
    #[arg(long, requires = "n", conflicts_with = "edges")]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, required_unless_present = "family")]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}
