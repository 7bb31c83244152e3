use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "celltower",
    version,
    about = "Cell data, orbits and decomposition matrices for TL(r,p,n)"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// JSON file with {"r","p","n","e","charges"}
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[arg(long, global = true)]
    pub r: Option<u32>,

    #[arg(long, global = true)]
    pub p: Option<u32>,

    #[arg(long, global = true)]
    pub n: Option<u32>,

    #[arg(long, global = true)]
    pub e: Option<u32>,

    /// Comma-separated charges j_0,...,j_{d-1}
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub charges: Option<Vec<i64>>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    /// Worker threads; 0 uses one per core
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Compare the output with this file, or write it if the file is missing
    #[arg(long, global = true, value_name = "PATH")]
    pub golden: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameter handling
    Params {
        #[command(subcommand)]
        action: ParamsAction,
    },
    /// List shapes or standard tableaux
    Enum {
        #[arg(value_enum, default_value_t = EnumTarget::Shapes)]
        target: EnumTarget,
    },
    /// Relation matrix of one of the orders
    Poset {
        #[arg(long, value_enum, default_value_t = PosetOrder::ShapePrime)]
        order: PosetOrder,
    },
    /// Orbit classes under the layer shift
    Orbits,
    /// Cell datum summary
    Datum {
        #[arg(long, value_enum, default_value_t = Algebra::Rpn)]
        algebra: Algebra,
    },
    /// Decomposition matrix
    Decomp {
        #[arg(long, value_enum, default_value_t = DecompChoice::Dominance)]
        order: DecompChoice,
        /// Include a witnessing tableau for every nonzero entry
        #[arg(long)]
        witnesses: bool,
    },
    /// Run verification suites
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum ParamsAction {
    Validate,
}

#[derive(Debug, Subcommand)]
pub enum VerifyAction {
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumTarget {
    Shapes,
    Tableaux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PosetOrder {
    Shape,
    #[value(name = "shape_prime")]
    ShapePrime,
    Dominance,
    Orbit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    R1n,
    Rpn,
    Skew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecompChoice {
    Dominance,
    Shape,
    #[value(name = "shape_prime")]
    ShapePrime,
}
