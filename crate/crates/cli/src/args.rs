use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pierik_core::{Engine, Space};

#[derive(Debug, Parser)]
#[command(
    name = "pierik",
    version,
    about = "K-theoretic Pieri coefficients for cominuscule Grassmannians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one coefficient c^ν_{λ,p}.
    Coeff(CoeffArgs),
    /// Expand O^λ · O^p in the Schubert basis.
    Expand(ExpandArgs),
    /// Emit c^ν_{λ,p} for every λ ⊂ ν as JSON Lines.
    Table(TableArgs),
    /// Count (and list) KOG/KLG-tableaux of ν/λ with content {1..p}.
    Tableaux(TableauxArgs),
    /// Run exhaustive property suites.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Direct,
    Recursive,
    Tableau,
    Lenart,
    All,
}

impl EngineArg {
    pub fn single(self) -> Option<Engine> {
        match self {
            EngineArg::Direct => Some(Engine::Direct),
            EngineArg::Recursive => Some(Engine::Recursive),
            EngineArg::Tableau => Some(Engine::Tableau),
            EngineArg::Lenart => Some(Engine::Lenart),
            EngineArg::All => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Engines,
    Signs,
    Vanishing,
    Duality,
    Symmetry,
    Associativity,
    All,
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    /// Directory for cached coefficient records.
    #[arg(long, env = "PIERIK_CACHE")]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    /// a:MxK, og:N or lg:N
    #[arg(long)]
    pub space: Space,
    /// Inner partition, e.g. 6,4,1 or - for empty.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Outer partition.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long, value_enum, default_value = "recursive")]
    pub engine: EngineArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Report per-engine wall time.
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long)]
    pub space: Space,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long, value_enum, default_value = "recursive")]
    pub engine: EngineArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub space: Space,
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: i64,
    #[arg(long, value_enum, default_value = "recursive")]
    pub engine: EngineArg,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Args)]
pub struct TableauxArgs {
    #[arg(long)]
    pub space: Space,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: String,
    #[arg(long = "p", allow_negative_numbers = true)]
    pub p: i64,
    /// Print every tableau after the count.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub space: Space,
    /// Largest special class to test; defaults to the space maximum.
    #[arg(long)]
    pub max_p: Option<i64>,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
}
