//! Graph file formats and report serialization.
//!
//! Reports are JSON documents whose keys follow struct declaration order and
//! whose floats use shortest round-trip formatting, so identical inputs give
//! byte-identical output.

mod edge_list;
mod matrix_market;

pub use edge_list::{emit_edge_list, parse_edge_list, parse_edge_list_as};
pub use matrix_market::{emit_matrix_market, parse_matrix_market};

use serde::{Deserialize, Serialize};

use crate::centrality::{CentralityParams, CentralityVector};
use crate::error::{Error, Result};
use crate::generators::RandomGraphSpec;
use crate::graph::Graph;
use crate::paradox::{
    BiasDistribution, CheckPair, ComparisonDecomposition, ExactDegreeStrings, HistogramBin, ParadoxReport,
    QuantilePoint,
};

/// A parsed graph with the file's original node ids, indexed by dense id.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub node_ids: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub n: usize,
    pub m: usize,
    pub directed: bool,
    pub regular: bool,
}

impl GraphMeta {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.node_count(),
            m: g.edge_count(),
            directed: g.is_directed(),
            regular: g.is_regular(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverInfo {
    pub iterations: usize,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<f64>,
}

impl SolverInfo {
    pub fn of(r: &CentralityVector) -> Self {
        Self {
            iterations: r.iterations,
            residual: r.residual,
            lambda1: r.lambda1,
            alpha: r.alpha,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParadoxStats {
    pub mu: f64,
    pub mu_bar: f64,
    pub mu_tilde: f64,
    pub slack: f64,
    pub paradox_holds: bool,
}

impl From<&ParadoxReport> for ParadoxStats {
    fn from(r: &ParadoxReport) -> Self {
        Self {
            mu: r.mu,
            mu_bar: r.mu_bar,
            mu_tilde: r.mu_tilde,
            slack: r.slack,
            paradox_holds: r.paradox_holds,
        }
    }
}

/// A [`BiasDistribution`] without the raw samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BiasSummary {
    pub ensemble: RandomGraphSpec,
    pub n_graphs: usize,
    pub sample_count: usize,
    pub mean: f64,
    pub stddev: f64,
    pub min: f64,
    pub max: f64,
    pub fraction_negative: f64,
    pub quantiles: Vec<QuantilePoint>,
    pub histogram: Vec<HistogramBin>,
}

impl From<&BiasDistribution> for BiasSummary {
    fn from(b: &BiasDistribution) -> Self {
        Self {
            ensemble: b.ensemble.clone(),
            n_graphs: b.n_graphs,
            sample_count: b.samples.len(),
            mean: b.mean,
            stddev: b.stddev,
            min: b.min,
            max: b.max,
            fraction_negative: b.fraction_negative,
            quantiles: b.quantiles.clone(),
            histogram: b.histogram.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EavesEntry {
    pub ell: u32,
    #[serde(flatten)]
    pub check: CheckPair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiedlerSummary {
    pub instances: usize,
    pub violations: usize,
    pub min_gap: f64,
    pub forced_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PageRankCheck {
    pub beta: f64,
    #[serde(flatten)]
    pub check: CheckPair,
}

/// Results of the identity and inequality checks on one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct IdentityBundle {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub symmetrization: Option<CheckPair>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub harmonic_mean: Option<CheckPair>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub eaves: Vec<EavesEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fiedler: Option<FiedlerSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pagerank: Option<PageRankCheck>,
    pub all_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRow {
    pub id: u64,
    pub degree: u64,
    pub r: f64,
    pub neighbor_avg: f64,
    pub delta: f64,
}

/// Build node rows; `neighbor_avg` must be `C r`.
pub fn node_table(g: &Graph, ids: &[u64], r: &[f64], neighbor_avg: &[f64]) -> Vec<NodeRow> {
    (0..g.node_count())
        .map(|i| NodeRow {
            id: ids[i],
            degree: g.degree(i),
            r: r[i],
            neighbor_avg: neighbor_avg[i],
            delta: neighbor_avg[i] - r[i],
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph_meta: Option<GraphMeta>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub measure: Option<CentralityParams>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub solver: Option<SolverInfo>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stats: Option<ParadoxStats>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_degree: Option<ExactDegreeStrings>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decomposition: Option<ComparisonDecomposition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bias_summary: Option<BiasSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identities: Option<IdentityBundle>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub node_table: Option<Vec<NodeRow>>,
}

impl ReportDocument {
    pub fn new() -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            graph_meta: None,
            measure: None,
            solver: None,
            stats: None,
            exact_degree: None,
            decomposition: None,
            bias_summary: None,
            identities: None,
            node_table: None,
        }
    }
}

impl Default for ReportDocument {
    fn default() -> Self {
        Self::new()
    }
}

/// Shortest round-trip rendering; integers keep a trailing `.0`.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}

pub const CSV_HEADER: &str = "id,degree,r,neighbor_avg,delta";

pub fn emit_report(doc: &ReportDocument, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc)
                .map_err(|e| Error::Numerical(format!("report serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => {
            let rows = doc
                .node_table
                .as_ref()
                .ok_or_else(|| Error::Usage("CSV output needs a per-node table".into()))?;
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for row in rows {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.id,
                    row.degree,
                    format_float(row.r),
                    format_float(row.neighbor_avg),
                    format_float(row.delta)
                ));
            }
            Ok(s)
        }
    }
}

pub fn parse_report(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Inverse of the CSV emitter.
pub fn parse_node_table_csv(text: &str) -> Result<Vec<NodeRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == CSV_HEADER => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected header '{CSV_HEADER}'"),
            })
        }
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(idx, line)| {
            let cells: Vec<&str> = line.split(',').collect();
            let bad = |column: usize, what: &str| Error::Parse {
                line: idx + 1,
                column,
                message: format!("invalid {what}"),
            };
            if cells.len() != 5 {
                return Err(bad(1, "row: expected 5 cells"));
            }
            let float = |k: usize, what: &str| cells[k].parse::<f64>().map_err(|_| bad(k + 1, what));
            Ok(NodeRow {
                id: cells[0].parse().map_err(|_| bad(1, "id"))?,
                degree: cells[1].parse().map_err(|_| bad(2, "degree"))?,
                r: float(2, "r")?,
                neighbor_avg: float(3, "neighbor_avg")?,
                delta: float(4, "delta")?,
            })
        })
        .collect()
}
