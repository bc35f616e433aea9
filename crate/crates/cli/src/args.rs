use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubesym_core::family::DEFAULT_MAX_VERTICES;
use cubesym_core::FamilySpec;

use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "cubesym", version, about = "Symmetry parameters of hypercube-variant graphs")]
pub struct Cli {
    /// Directory for cached parameter results.
    #[arg(long, env = "CUBE_SYM_CACHE", default_value = ".cube-symmetry-cache", global = true)]
    pub cache_dir: PathBuf,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Reserved. Every algorithm is deterministic, so the seed has no effect.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Refuse to build graphs with more vertices than this.
    #[arg(long, env = "CUBE_SYM_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES, global = true)]
    pub max_vertices: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a family graph.
    Gen(GenArgs),
    /// Compute a symmetry parameter of a family graph.
    Param(ParamArgs),
    /// Recompute the summary tables.
    Tables(TablesArgs),
    /// Run an explicit construction and check it.
    Construct(ConstructArgs),
    /// Re-check every witness in a JSON file.
    Verify(VerifyArgs),
    /// Dump cached results.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Hypercube,
    #[value(alias = "hypercube-power")]
    Power,
    Hamming,
    Folded,
    Enhanced,
    Augmented,
    #[value(alias = "ltq")]
    LocallyTwisted,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    pub family: FamilyKind,
    /// Dimension (number of positions or factors).
    #[arg(short = 'n')]
    pub n: u32,
    /// Power for `power`, enhancement index for `enhanced`.
    #[arg(short = 'k')]
    pub k: Option<u32>,
    /// Factor size for `hamming`.
    #[arg(short = 'm')]
    pub m: Option<u32>,
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<FamilySpec> {
        let n = self.n;
        let need = |v: Option<u32>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("{:?} needs -{flag}", self.family).to_lowercase()))
        };
        let spec = match self.family {
            FamilyKind::Hypercube => FamilySpec::Hypercube { n },
            FamilyKind::Power => FamilySpec::HypercubePower { n, k: need(self.k, "k")? },
            FamilyKind::Hamming => FamilySpec::Hamming { m: need(self.m, "m")?, n },
            FamilyKind::Folded => FamilySpec::Folded { n },
            FamilyKind::Enhanced => FamilySpec::Enhanced { n, k: need(self.k, "k")? },
            FamilyKind::Augmented => FamilySpec::Augmented { n },
            FamilyKind::LocallyTwisted => FamilySpec::LocallyTwisted { n },
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
    pub format: GraphFormat,
    /// Write to a file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamKind {
    Det,
    Dist,
    Cost,
    AutOrder,
    Transitivity,
}

impl ParamKind {
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::Det => "det",
            ParamKind::Dist => "dist",
            ParamKind::Cost => "cost",
            ParamKind::AutOrder => "aut-order",
            ParamKind::Transitivity => "transitivity",
        }
    }
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    pub parameter: ParamKind,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Cross-check against brute-force enumeration (small graphs only).
    #[arg(long)]
    pub oracle: bool,
    /// Include the certificate in the report.
    #[arg(long)]
    pub witness: bool,
    /// Node budget for group and parameter searches.
    #[arg(long)]
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Transitivity,
    Summary,
    EnhancedDist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    pub which: TableKind,
    /// Dimension for `transitivity` and `summary`.
    #[arg(long, default_value_t = 6)]
    pub n: u32,
    /// Smallest dimension for `enhanced-dist`.
    #[arg(long, default_value_t = 2)]
    pub n_min: u32,
    /// Largest dimension for `enhanced-dist`.
    #[arg(long, default_value_t = 5)]
    pub n_max: u32,
    /// Power and enhancement index used in the `summary` rows.
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Factor size of the Hamming row in `summary`.
    #[arg(long, default_value_t = 3)]
    pub m: u32,
    /// Node budget per cell.
    #[arg(long, default_value_t = 2_000_000)]
    pub node_budget: u64,
    /// Largest graph searched per cell.
    #[arg(long, default_value_t = 4096)]
    pub cell_vertices: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    HypercubeDet,
    Q2Witnesses,
    FqDetSet,
    FqDistClass,
    EnhancedDet,
    AqDet,
    AqCostClass,
    LtqWitnesses,
    HammingDet,
    HammingCost,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub name: ConstructionKind,
    #[arg(short = 'n')]
    pub n: u64,
    #[arg(short = 'k')]
    pub k: Option<u32>,
    #[arg(short = 'm')]
    pub m: Option<u32>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A JSON file written by `param --witness` or `construct`.
    pub file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
    pub format: ExportFormat,
}
