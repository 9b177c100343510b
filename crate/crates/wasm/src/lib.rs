//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes plain values, returns a JSON string, and throws a
//! string on failure. The logic lives in ordinary functions so it can be
//! tested on the host.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use paradox_lab::centrality::{self, DEFAULT_MAX_ITERS, DEFAULT_TOL};
use paradox_lab::io::{node_table, parse_edge_list, NodeRow};
use paradox_lab::paradox::{self, HistogramBin};
use paradox_lab::{CentralityParams, KatzAlpha, Measure, Model, RandomGraphSpec};

/// Upper bound on interactive work so the page stays responsive.
const MAX_NODES: usize = 2_000;
const MAX_GRAPHS: usize = 2_000;
const MAX_SWEEP_STEPS: usize = 200;

#[derive(Debug, Serialize)]
pub struct GraphAnalysis {
    pub n: usize,
    pub m: usize,
    pub measure: &'static str,
    pub mu: f64,
    pub mu_bar: f64,
    pub mu_tilde: f64,
    pub slack: f64,
    pub paradox_holds: bool,
    pub regular: bool,
    pub nodes: Vec<NodeRow>,
    /// Undirected edges as index pairs, for drawing.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
pub struct BiasHistogram {
    pub samples: usize,
    pub mean: f64,
    pub fraction_negative: f64,
    pub bins: Vec<HistogramBin>,
}

#[derive(Debug, Serialize)]
pub struct SweepPoint {
    /// `alpha * lambda_1`.
    pub fraction: f64,
    pub alpha: f64,
    pub mu: f64,
    pub mu_bar: f64,
    pub mu_tilde: f64,
}

fn measure_from(name: &str, param: f64) -> Result<Measure, String> {
    Ok(match name {
        "degree" => Measure::Degree,
        "walk_count" => {
            if !((1.0..=20.0).contains(&param) && param.fract() == 0.0) {
                return Err(format!("walk length must be an integer in 1..=20, got {param}"));
            }
            Measure::WalkCount { ell: param as u32 }
        }
        "eigenvector" => Measure::Eigenvector,
        "katz" => Measure::Katz {
            alpha: KatzAlpha::SpectralFraction(param),
        },
        "pagerank" => Measure::PageRank { beta: param },
        "closeness" => Measure::Closeness,
        "harmonic" => Measure::Harmonic,
        other => return Err(format!("unknown measure '{other}'")),
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Centrality plus the three means on a pasted edge list. `param` is the walk
/// length, the Katz fraction of `1 / lambda_1`, or the PageRank `beta`.
pub fn analyze(edge_list: &str, measure: &str, param: f64) -> Result<GraphAnalysis, String> {
    let parsed = parse_edge_list(edge_list).map_err(|e| e.to_string())?;
    let g = &parsed.graph;
    if g.node_count() > MAX_NODES {
        return Err(format!("the demo handles at most {MAX_NODES} nodes"));
    }
    let measure = measure_from(measure, param)?;
    // PageRank runs on the bidirected twin; the drawing keeps the original edges
    let solved = if matches!(measure, Measure::PageRank { .. }) && !g.is_directed() {
        g.to_bidirected()
    } else {
        g.clone()
    };
    let r = centrality::compute(&solved, &CentralityParams::new(measure)).map_err(|e| e.to_string())?;
    let rep = paradox::paradox_report(&solved, &r).map_err(|e| e.to_string())?;
    let avg = solved.apply_transition(&r.values).map_err(|e| e.to_string())?;
    Ok(GraphAnalysis {
        n: g.node_count(),
        m: g.edge_count(),
        measure: measure.name(),
        mu: rep.mu,
        mu_bar: rep.mu_bar,
        mu_tilde: rep.mu_tilde,
        slack: rep.slack,
        paradox_holds: rep.paradox_holds,
        regular: rep.is_regular,
        nodes: node_table(&solved, &parsed.node_ids, &r.values, &avg),
        edges: g.edge_list(),
    })
}

/// Per-node bias `(C r)_i - r_i` pooled over `graphs` Erdős–Rényi samples.
pub fn bias(n: usize, p: f64, graphs: usize, seed: u64, measure: &str, param: f64) -> Result<BiasHistogram, String> {
    if n > MAX_NODES || graphs > MAX_GRAPHS {
        return Err(format!(
            "the demo handles at most {MAX_NODES} nodes and {MAX_GRAPHS} graphs"
        ));
    }
    let spec = RandomGraphSpec::new(Model::ErdosRenyi { p }, n);
    let params = CentralityParams::new(measure_from(measure, param)?);
    let dist = paradox::bias_distribution(&spec, &params, graphs, seed, None).map_err(|e| e.to_string())?;
    Ok(BiasHistogram {
        samples: dist.samples.len(),
        mean: dist.mean,
        fraction_negative: dist.fraction_negative,
        bins: dist.histogram,
    })
}

/// Katz means as `alpha` runs from near 0 to just below `1 / lambda_1`.
pub fn katz_sweep(edge_list: &str, steps: usize) -> Result<Vec<SweepPoint>, String> {
    if !(2..=MAX_SWEEP_STEPS).contains(&steps) {
        return Err(format!("steps must lie in 2..={MAX_SWEEP_STEPS}"));
    }
    let g = parse_edge_list(edge_list).map_err(|e| e.to_string())?.graph;
    if g.node_count() > MAX_NODES {
        return Err(format!("the demo handles at most {MAX_NODES} nodes"));
    }
    let (s, _) = centrality::eigenvector_centrality(&g, DEFAULT_TOL, DEFAULT_MAX_ITERS).map_err(|e| e.to_string())?;
    (0..steps)
        .map(|k| {
            let fraction = 0.01 + 0.97 * k as f64 / (steps - 1) as f64;
            let alpha = fraction / s.lambda1;
            let r =
                centrality::katz_centrality(&g, alpha, DEFAULT_TOL, DEFAULT_MAX_ITERS).map_err(|e| e.to_string())?;
            let rep = paradox::paradox_report(&g, &r).map_err(|e| e.to_string())?;
            Ok(SweepPoint {
                fraction,
                alpha,
                mu: rep.mu,
                mu_bar: rep.mu_bar,
                mu_tilde: rep.mu_tilde,
            })
        })
        .collect()
}

#[wasm_bindgen(js_name = analyzeGraph)]
pub fn analyze_graph(edge_list: &str, measure: &str, param: f64) -> Result<String, JsValue> {
    analyze(edge_list, measure, param)
        .and_then(|a| to_json(&a))
        .map_err(JsValue::from)
}

#[wasm_bindgen(js_name = biasHistogram)]
pub fn bias_histogram(
    n: usize,
    p: f64,
    graphs: usize,
    seed: u32,
    measure: &str,
    param: f64,
) -> Result<String, JsValue> {
    bias(n, p, graphs, u64::from(seed), measure, param)
        .and_then(|b| to_json(&b))
        .map_err(JsValue::from)
}

#[wasm_bindgen(js_name = katzSweep)]
pub fn katz_sweep_json(edge_list: &str, steps: usize) -> Result<String, JsValue> {
    katz_sweep(edge_list, steps)
        .and_then(|s| to_json(&s))
        .map_err(JsValue::from)
}
