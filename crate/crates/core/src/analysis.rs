//! Report assembly shared by the command-line tool and the browser demo.

use crate::centrality::{self, CentralityParams, Measure};
use crate::error::{Error, Result};
use crate::generators::RandomGraphSpec;
use crate::graph::Graph;
use crate::io::{
    node_table, BiasSummary, EavesEntry, FiedlerSummary, GraphMeta, IdentityBundle, PageRankCheck, ParadoxStats,
    ParsedGraph, ReportDocument, SolverInfo,
};
use crate::oracle::{dense_from_graph, DenseMatrix};
use crate::paradox::{self, MAX_FIEDLER_DIM};

/// A document plus human-readable notices for the diagnostic stream.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub document: ReportDocument,
    pub notices: Vec<String>,
}

/// PageRank needs a digraph; undirected input becomes its bidirected twin.
fn prepare(input: &ParsedGraph, measure: &Measure, notices: &mut Vec<String>) -> Graph {
    if matches!(measure, Measure::PageRank { .. }) && !input.graph.is_directed() {
        notices.push("note: undirected input promoted to a bidirected graph for PageRank".into());
        return input.graph.to_bidirected();
    }
    input.graph.clone()
}

fn base_document(g: &Graph, params: &CentralityParams) -> ReportDocument {
    let mut doc = ReportDocument::new();
    doc.graph_meta = Some(GraphMeta::of(g));
    doc.measure = Some(*params);
    doc
}

/// Scores with a per-node table.
pub fn centrality_document(input: &ParsedGraph, params: &CentralityParams) -> Result<Outcome> {
    let mut notices = Vec::new();
    let g = prepare(input, &params.measure, &mut notices);
    let r = centrality::compute(&g, params)?;
    let avg = g.apply_transition(&r.values)?;
    let mut doc = base_document(&g, params);
    doc.solver = Some(SolverInfo::of(&r));
    doc.node_table = Some(node_table(&g, &input.node_ids, &r.values, &avg));
    Ok(Outcome { document: doc, notices })
}

/// Means, slack and verdict, with exact rationals for degree centrality.
pub fn paradox_document(input: &ParsedGraph, params: &CentralityParams) -> Result<Outcome> {
    let mut notices = Vec::new();
    let g = prepare(input, &params.measure, &mut notices);
    let r = centrality::compute(&g, params)?;
    let report = paradox::paradox_report(&g, &r)?;
    let avg = g.apply_transition(&r.values)?;
    let mut doc = base_document(&g, params);
    doc.solver = Some(SolverInfo::of(&r));
    doc.stats = Some(ParadoxStats::from(&report));
    if params.measure == Measure::Degree {
        doc.exact_degree = Some(paradox::exact_degree_stats(&g)?.to_strings());
    }
    if !params.measure.is_paradox_measure() {
        notices.push(format!(
            "note: {} centrality is exploratory; the paradox is not guaranteed",
            params.measure.name()
        ));
    }
    doc.node_table = Some(node_table(&g, &input.node_ids, &r.values, &avg));
    Ok(Outcome { document: doc, notices })
}

/// `mu_bar` against `mu_tilde` through both summation orders.
pub fn compare_document(input: &ParsedGraph, params: &CentralityParams) -> Result<Outcome> {
    let mut notices = Vec::new();
    let g = prepare(input, &params.measure, &mut notices);
    let r = centrality::compute(&g, params)?;
    let mut doc = base_document(&g, params);
    doc.solver = Some(SolverInfo::of(&r));
    doc.stats = Some(ParadoxStats::from(&paradox::paradox_report(&g, &r)?));
    doc.decomposition = Some(paradox::compare_averages(&g, &r)?);
    Ok(Outcome { document: doc, notices })
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityOptions {
    pub ells: Vec<u32>,
    pub beta: f64,
    pub fiedler_trials: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for IdentityOptions {
    fn default() -> Self {
        Self {
            ells: vec![1, 2, 3],
            beta: centrality::DEFAULT_BETA,
            fiedler_trials: 100,
            seed: 0,
            tol: centrality::DEFAULT_TOL,
            max_iters: centrality::DEFAULT_MAX_ITERS,
        }
    }
}

/// Dense `C`, or the PageRank matrix `(1 - beta) C + (beta / n) 1 1^T` for digraphs.
fn dense_walk_matrix(g: &Graph, beta: f64) -> Result<DenseMatrix> {
    let a = dense_from_graph(g)?;
    let n = g.node_count();
    let mut m = a.clone();
    let teleport = if g.is_directed() { beta / n as f64 } else { 0.0 };
    let keep = if g.is_directed() { 1.0 - beta } else { 1.0 };
    for i in 0..n {
        let d = g.degree(i) as f64;
        for j in 0..n {
            m.set(i, j, keep * a.get(i, j) / d + teleport);
        }
    }
    Ok(m)
}

/// Every check that applies to the graph's orientation. The Fiedler sample
/// runs only when `n <= 16`.
pub fn identity_bundle(g: &Graph, opts: &IdentityOptions) -> Result<IdentityBundle> {
    g.require_irreducible()?;
    let mut bundle = IdentityBundle::default();
    let pagerank_graph = if g.is_directed() { g.clone() } else { g.to_bidirected() };
    if !g.is_directed() {
        bundle.symmetrization = Some(paradox::symmetrization_identity(g)?);
        let (spectral, _) = centrality::eigenvector_centrality(g, opts.tol, opts.max_iters)?;
        bundle.harmonic_mean = Some(paradox::harmonic_mean_check(g, &spectral)?);
        for &ell in &opts.ells {
            bundle.eaves.push(EavesEntry {
                ell,
                check: paradox::eaves_check(g, ell)?,
            });
        }
    }
    let r = centrality::pagerank_centrality(&pagerank_graph, opts.beta, opts.tol, opts.max_iters)?;
    bundle.pagerank = Some(PageRankCheck {
        beta: opts.beta,
        check: paradox::pagerank_paradox_check(&pagerank_graph, &r)?,
    });
    if g.node_count() <= MAX_FIEDLER_DIM && g.node_count() >= 2 && opts.fiedler_trials > 0 {
        let p = dense_walk_matrix(g, opts.beta)?;
        let instances = paradox::fiedler_check(&p, opts.fiedler_trials, opts.seed)?;
        bundle.fiedler = Some(FiedlerSummary {
            instances: instances.len(),
            violations: instances.iter().filter(|i| i.gap() < -1e-9).count(),
            min_gap: instances.iter().map(|i| i.gap()).fold(f64::INFINITY, f64::min),
            forced_gap: instances
                .iter()
                .find(|i| i.forced_equality)
                .map_or(0.0, |i| i.gap().abs()),
        });
    }
    bundle.all_hold = bundle.symmetrization.is_none_or(|c| c.holds)
        && bundle.harmonic_mean.is_none_or(|c| c.holds)
        && bundle.eaves.iter().all(|e| e.check.holds)
        && bundle.pagerank.as_ref().is_none_or(|p| p.check.holds)
        && bundle
            .fiedler
            .as_ref()
            .is_none_or(|f| f.violations == 0 && f.forced_gap <= 1e-9);
    Ok(bundle)
}

pub fn identities_document(input: &ParsedGraph, opts: &IdentityOptions) -> Result<Outcome> {
    let mut doc = ReportDocument::new();
    doc.graph_meta = Some(GraphMeta::of(&input.graph));
    doc.seed = Some(opts.seed);
    doc.identities = Some(identity_bundle(&input.graph, opts)?);
    Ok(Outcome {
        document: doc,
        notices: Vec::new(),
    })
}

pub fn bias_document(
    spec: &RandomGraphSpec,
    params: &CentralityParams,
    n_graphs: usize,
    seed: u64,
    bins: Option<usize>,
) -> Result<Outcome> {
    if let Some(0) = bins {
        return Err(Error::Parameter("bin count must be positive".into()));
    }
    let dist = paradox::bias_distribution(spec, params, n_graphs, seed, bins)?;
    let mut doc = ReportDocument::new();
    doc.seed = Some(seed);
    doc.measure = Some(*params);
    doc.bias_summary = Some(BiasSummary::from(&dist));
    Ok(Outcome {
        document: doc,
        notices: Vec::new(),
    })
}
