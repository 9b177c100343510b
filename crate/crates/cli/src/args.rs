use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "paradox-lab",
    version,
    about = "Generalized friendship paradox for network centralities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it as an edge list (or Matrix Market).
    Gen {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[arg(long, value_enum, default_value = "edge_list")]
        graph_format: GraphFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-node centrality scores.
    Centrality(AnalysisArgs),
    /// Mean, neighbor mean and edge-sampled mean of a centrality.
    Paradox(AnalysisArgs),
    /// Neighbor mean against edge-sampled mean, with the per-node decomposition.
    Compare(AnalysisArgs),
    /// Distribution of the per-node bias over an ensemble of random graphs.
    Bias {
        #[command(flatten)]
        generator: GeneratorArgs,
        #[command(flatten)]
        measure: MeasureArgs,
        /// Number of graphs in the ensemble.
        #[arg(long, default_value_t = 100)]
        graphs: usize,
        /// Histogram bin count (Freedman-Diaconis when omitted).
        #[arg(long)]
        bins: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symmetrization, harmonic-mean, walk-count, Fiedler and PageRank checks.
    Identities {
        #[command(flatten)]
        input: InputArgs,
        /// Damping parameter for the PageRank check.
        #[arg(long, default_value_t = 0.85)]
        beta: f64,
        /// Walk lengths for the walk-count inequality.
        #[arg(long, value_delimiter = ',', default_values_t = [1u32, 2, 3])]
        ells: Vec<u32>,
        /// Sampled instances of the Fiedler inequality (graphs with n <= 16).
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iters: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub measure: MeasureArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum GraphFormat {
    EdgeList,
    MatrixMarket,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum ModelName {
    Path,
    Cycle,
    Star,
    Complete,
    KRegular,
    ErdosRenyi,
    Configuration,
    PreferentialAttachment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum MeasureName {
    Degree,
    WalkCount,
    Eigenvector,
    Katz,
    Pagerank,
    Closeness,
    Harmonic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Csv,
}

/// A graph file or a generator description.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file (edge list, or Matrix Market for `.mtx`).
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub graph_format: Option<GraphFormat>,
    /// Read header-less edge lists as directed.
    #[arg(long)]
    pub directed: bool,
    #[command(flatten)]
    pub generator: GeneratorArgs,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    #[arg(long, value_enum)]
    pub model: Option<ModelName>,
    /// Node count (random models default to 50).
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability for erdos_renyi (default 0.1).
    #[arg(long)]
    pub p: Option<f64>,
    /// Degree for k_regular.
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated degree sequence for configuration.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<usize>>,
    /// Edges per new node for preferential_attachment (default 2).
    #[arg(long)]
    pub m_attach: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Keep every component instead of the largest one.
    #[arg(long)]
    pub no_lcc: bool,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[arg(long, value_enum, default_value = "degree")]
    pub measure: MeasureName,
    /// Walk length for walk_count.
    #[arg(long)]
    pub ell: Option<u32>,
    /// Katz attenuation (default 0.85 / lambda_1).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// PageRank teleport probability.
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iters: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Write here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
