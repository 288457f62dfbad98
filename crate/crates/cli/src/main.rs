mod commands;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "holokit",
    version,
    about = "Matroids, Orlik-Solomon series and holonomy Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Clone, Copy)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Skip simplicity checks on graph input.
    #[arg(long, global = true)]
    pub no_validate: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Flats, Orlik-Solomon series and region counts.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// Holonomy Lie algebra of an arrangement.
    #[command(subcommand)]
    Holonomy(HolonomyCmd),
    /// Clique exponents and elimination towers of a graph.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Compare engine series with closed-form predictions.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Scan a directory of edge lists for non-positive clique exponents.
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Built-in arrangements and graphs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
}

#[derive(Subcommand)]
pub enum MatroidCmd {
    /// Flats by rank with Möbius values.
    Flats { source: String },
    /// Orlik-Solomon Hilbert series.
    OsSeries { source: String },
    /// Sum of |μ| over all flats.
    Regions { source: String },
}

#[derive(Args)]
pub struct DegreeArg {
    /// Highest degree to compute.
    #[arg(short = 'D', long = "max-degree")]
    pub max_degree: usize,
}

#[derive(Subcommand)]
pub enum HolonomyCmd {
    /// Print the generators and relations.
    Present { source: String },
    /// Graded dimensions.
    Dims {
        source: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Enveloping-algebra series.
    Series {
        source: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Decomposability, or ideal dimensions for a block partition or a block.
    Decompose {
        source: String,
        /// Highest degree for the ideal dimensions.
        #[arg(short = 'D', long = "max-degree", default_value_t = 3)]
        max_degree: usize,
        /// Closed block partition by block index, e.g. `0,1;2`.
        #[arg(long, conflicts_with = "block")]
        parts: Option<String>,
        /// Report the kernel of the projection onto this block's local algebra.
        #[arg(long)]
        block: Option<usize>,
    },
}

#[derive(Subcommand)]
pub enum GraphCmd {
    /// Clique counts, exponents and the predicted series.
    Lfs {
        edgefile: String,
        #[arg(short = 'D', long = "max-degree", default_value_t = 5)]
        max_degree: usize,
    },
    /// Simplicial-vertex elimination tower.
    Tower { edgefile: String },
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// Complete graph K_n against the product of 1/(1 - i t).
    Kohno {
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Graph against the clique-exponent product.
    Lfs {
        edgefile: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Arrangement against a tower of free Lie algebras.
    Tower {
        source: String,
        /// Comma-separated ranks; defaults to the elimination tower of a graph.
        #[arg(long, value_delimiter = ',')]
        ranks: Option<Vec<u64>>,
        #[command(flatten)]
        degree: DegreeArg,
    },
}

#[derive(Subcommand)]
pub enum ScanCmd {
    /// Clique exponents of every edge list in a directory.
    Exponents { dir: String },
}

#[derive(Subcommand)]
pub enum CatalogCmd {
    /// Names and descriptions.
    List,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
