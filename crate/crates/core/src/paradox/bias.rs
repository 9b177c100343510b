//! Pooled per-node bias `delta_i = (C r)_i - r_i` over a random-graph ensemble.

use serde::{Deserialize, Serialize};

use crate::centrality::{compute, CentralityParams};
use crate::error::{Error, Result};
use crate::generators::{generate, RandomGraphSpec, MAX_RETRIES};
use crate::graph::Graph;
use crate::rng::derive_seed;

use super::paradox_report;

pub const QUANTILE_LEVELS: [f64; 7] = [0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99];
const MIN_BINS: usize = 10;
const MAX_BINS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantilePoint {
    pub level: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BiasDistribution {
    pub measure: CentralityParams,
    pub ensemble: RandomGraphSpec,
    pub n_graphs: usize,
    pub samples: Vec<f64>,
    pub mean: f64,
    pub stddev: f64,
    pub min: f64,
    pub max: f64,
    pub quantiles: Vec<QuantilePoint>,
    pub histogram: Vec<HistogramBin>,
    pub fraction_negative: f64,
}

/// Sample `n_graphs` graphs and pool every node's bias.
///
/// Graph `i` is drawn with seed `derive_seed(derive_seed(seed, i), attempt)`,
/// retrying disconnected draws, so results do not depend on scheduling.
/// `bins` overrides the Freedman–Diaconis bin count.
pub fn bias_distribution(
    spec: &RandomGraphSpec,
    measure: &CentralityParams,
    n_graphs: usize,
    seed: u64,
    bins: Option<usize>,
) -> Result<BiasDistribution> {
    if n_graphs == 0 {
        return Err(Error::Parameter("n_graphs must be at least 1".into()));
    }
    spec.validate()?;

    let per_graph = |index: usize| -> Result<Vec<f64>> {
        let g = sample_connected(spec, derive_seed(seed, index as u64))?;
        let r = compute(&g, measure)?;
        Ok(paradox_report(&g, &r)?.delta)
    };

    #[cfg(feature = "parallel")]
    let pooled: Vec<Result<Vec<f64>>> = {
        use rayon::prelude::*;
        (0..n_graphs).into_par_iter().map(per_graph).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let pooled: Vec<Result<Vec<f64>>> = (0..n_graphs).map(per_graph).collect();

    let mut samples = Vec::new();
    for deltas in pooled {
        samples.extend(deltas?);
    }
    summarize(spec.clone().with_seed(seed), *measure, n_graphs, samples, bins)
}

fn sample_connected(spec: &RandomGraphSpec, graph_seed: u64) -> Result<Graph> {
    for attempt in 0..MAX_RETRIES {
        let draw = spec.clone().with_seed(derive_seed(graph_seed, attempt as u64));
        let g = generate(&draw)?;
        if g.is_connected()? {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "{} draws in a row were disconnected; enable largest-component extraction or densify",
        MAX_RETRIES
    )))
}

fn summarize(
    ensemble: RandomGraphSpec,
    measure: CentralityParams,
    n_graphs: usize,
    samples: Vec<f64>,
    bins: Option<usize>,
) -> Result<BiasDistribution> {
    let len = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / len;
    let var = if samples.len() > 1 {
        samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (len - 1.0)
    } else {
        0.0
    };
    let mut sorted = samples.clone();
    sorted.sort_by(f64::total_cmp);
    let quantiles = QUANTILE_LEVELS
        .iter()
        .map(|&level| QuantilePoint {
            level,
            value: quantile(&sorted, level),
        })
        .collect();
    let fraction_negative = samples.iter().filter(|&&x| x < 0.0).count() as f64 / len;
    Ok(BiasDistribution {
        measure,
        ensemble,
        n_graphs,
        min: sorted[0],
        max: sorted[sorted.len() - 1],
        histogram: histogram(&sorted, bins),
        samples,
        mean,
        stddev: var.sqrt(),
        quantiles,
        fraction_negative,
    })
}

/// Linear interpolation between order statistics (`(len - 1) * level`).
pub fn quantile(sorted: &[f64], level: f64) -> f64 {
    let pos = (sorted.len() - 1) as f64 * level;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Equal-width bins over `[min, max]`; Freedman–Diaconis width unless `bins` is given.
pub fn histogram(sorted: &[f64], bins: Option<usize>) -> Vec<HistogramBin> {
    let (mut lo, mut hi) = (sorted[0], sorted[sorted.len() - 1]);
    if hi == lo {
        lo -= 0.5;
        hi += 0.5;
    }
    let count = bins.unwrap_or_else(|| {
        let iqr = quantile(sorted, 0.75) - quantile(sorted, 0.25);
        let width = 2.0 * iqr / (sorted.len() as f64).cbrt();
        if width > 0.0 {
            (((hi - lo) / width).ceil() as usize).clamp(MIN_BINS, MAX_BINS)
        } else {
            MIN_BINS
        }
    });
    let count = count.max(1);
    let width = (hi - lo) / count as f64;
    let mut out: Vec<HistogramBin> = (0..count)
        .map(|k| HistogramBin {
            lo: lo + k as f64 * width,
            hi: if k + 1 == count {
                hi
            } else {
                lo + (k + 1) as f64 * width
            },
            count: 0,
        })
        .collect();
    for &x in sorted {
        let k = (((x - lo) / width).floor() as usize).min(count - 1);
        out[k].count += 1;
    }
    out
}
