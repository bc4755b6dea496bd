use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use preorder_core::bounds::BoundMethod;
use preorder_core::conditions::{ConditionId, PipelineConfig, SubsetStrategy};

use crate::failure::{CliResult, Failure};

#[derive(Parser, Debug)]
#[command(
    name = "preorder",
    version,
    about = "Partial optimality for maximum-value preordering"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write synthetic instance ensembles and a manifest of their seeds.
    Generate(GenerateArgs),
    /// Run the fixation pipeline on instances and emit one stats row per instance.
    Fix(FixArgs),
    /// Certify the fixations on a small instance by exhaustive enumeration.
    OracleCheck(OracleCheckArgs),
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "20")]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0.25")]
    pub alpha: Vec<f64>,
    #[arg(long = "p-e", value_delimiter = ',', default_value = "0.5")]
    pub p_e: Vec<f64>,
    /// Instances per (n, alpha, p_E); split evenly over the planted preorders.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Planted preorders per (n, alpha, p_E).
    #[arg(long, default_value_t = 5)]
    pub truths: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct FixArgs {
    /// Instance CSV files or directories of them.
    pub inputs: Vec<PathBuf>,
    /// Follower-graph edge lists (`src dst` per line) to ingest as ±1 instances.
    #[arg(long)]
    pub ego: Vec<PathBuf>,
    /// Stats CSV; rows are appended if it exists. Defaults to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Directory receiving `<instance>.partial.csv` per instance.
    #[arg(long)]
    pub emit_partial: Option<PathBuf>,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
}

#[derive(Args, Debug)]
pub struct OracleCheckArgs {
    pub instance: PathBuf,
    /// Check this partial assignment instead of running the pipeline.
    #[arg(long)]
    pub partial: Option<PathBuf>,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SubsetArg {
    Neighborhood,
    Full,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundsArg {
    Simple,
    Heuristic,
    Tractable,
}

#[derive(Args, Debug, Clone)]
pub struct PipelineArgs {
    /// Comma-separated condition names in execution order, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub conditions: Vec<String>,
    #[arg(long, default_value_t = 64)]
    pub rounds: usize,
    #[arg(long)]
    pub single_pass: bool,
    /// Worker threads; 0 uses every core, 1 runs fully sequentially.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Maximum αβ-swap sweeps per join search.
    #[arg(long, default_value_t = 20)]
    pub sweeps: usize,
    /// Solve one cut per pair instead of re-testing found cuts.
    #[arg(long)]
    pub no_reuse: bool,
    #[arg(long, value_enum, default_value = "neighborhood")]
    pub subset: SubsetArg,
    /// Neighbors added to `{i, j}` by the neighborhood subset strategy.
    #[arg(long, default_value_t = 4)]
    pub subset_k: usize,
    #[arg(long, value_enum, default_value = "heuristic")]
    pub bounds: BoundsArg,
    /// Do not contract classes fixed to one between conditions.
    #[arg(long)]
    pub no_merge: bool,
}

impl PipelineArgs {
    pub fn conditions(&self) -> CliResult<Vec<ConditionId>> {
        if self.conditions.len() == 1 && self.conditions[0] == "all" {
            return Ok(ConditionId::ALL.to_vec());
        }
        self.conditions
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<ConditionId>()
                    .map_err(|e| Failure::Usage(e.to_string()))
            })
            .collect()
    }

    pub fn config(&self) -> CliResult<PipelineConfig> {
        let cfg = PipelineConfig {
            conditions: self.conditions()?,
            max_rounds: self.rounds,
            single_pass: self.single_pass,
            parallel: self.threads != 1,
            swap_sweeps: self.sweeps,
            edge_cut_reuse: !self.no_reuse,
            subset_strategy: match self.subset {
                SubsetArg::Neighborhood => SubsetStrategy::Neighborhood { k: self.subset_k },
                SubsetArg::Full => SubsetStrategy::Full,
                SubsetArg::Both => SubsetStrategy::NeighborhoodThenFull { k: self.subset_k },
            },
            bound_method: match self.bounds {
                BoundsArg::Simple => BoundMethod::Simple,
                BoundsArg::Heuristic => BoundMethod::Heuristic,
                BoundsArg::Tractable => BoundMethod::Tractable,
            },
            merge: !self.no_merge,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Runs `f` inside a pool of the requested size.
    pub fn with_pool<R: Send>(&self, f: impl FnOnce() -> R + Send) -> CliResult<R> {
        #[cfg(feature = "parallel")]
        {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(pool.install(f))
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(f())
        }
    }
}
