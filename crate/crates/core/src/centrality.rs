//! Degree, walk-count, eigenvector, Katz and PageRank centralities, plus the
//! distance-based closeness and harmonic scores.
//!
//! All iterative solvers start from the uniform vector and stop when their
//! own residual drops below `tol`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITERS: usize = 100_000;
pub const DEFAULT_BETA: f64 = 0.85;
pub const DEFAULT_ELL: u32 = 2;
/// Default Katz attenuation as a fraction of `1 / lambda_1`.
pub const DEFAULT_KATZ_FRACTION: f64 = 0.85;

/// Katz admissibility margin: `alpha <= (1 - margin) / lambda_1`.
const KATZ_MARGIN: f64 = 1e-9;
/// Largest integer every smaller integer of which is exactly representable.
const EXACT_FLOAT_LIMIT: f64 = 9_007_199_254_740_992.0;

/// Katz attenuation, fixed or relative to the spectral radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KatzAlpha {
    Fixed(f64),
    /// `alpha = fraction / lambda_1`, resolved per graph.
    SpectralFraction(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Measure {
    Degree,
    WalkCount {
        ell: u32,
    },
    Eigenvector,
    Katz {
        alpha: KatzAlpha,
    },
    #[serde(rename = "pagerank")]
    PageRank {
        beta: f64,
    },
    Closeness,
    Harmonic,
}

impl Measure {
    pub fn name(&self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::WalkCount { .. } => "walk_count",
            Measure::Eigenvector => "eigenvector",
            Measure::Katz { .. } => "katz",
            Measure::PageRank { .. } => "pagerank",
            Measure::Closeness => "closeness",
            Measure::Harmonic => "harmonic",
        }
    }

    /// One of the five measures for which neighbor averaging provably dominates.
    pub fn is_paradox_measure(&self) -> bool {
        !matches!(self, Measure::Closeness | Measure::Harmonic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CentralityParams {
    pub measure: Measure,
    pub tol: f64,
    pub max_iters: usize,
}

impl CentralityParams {
    pub fn new(measure: Measure) -> Self {
        Self {
            measure,
            tol: DEFAULT_TOL,
            max_iters: DEFAULT_MAX_ITERS,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iters(mut self, max_iters: usize) -> Self {
        self.max_iters = max_iters;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Parameter(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iters == 0 {
            return Err(Error::Parameter("max_iters must be positive".into()));
        }
        Ok(())
    }
}

/// Per-node scores with solver diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityVector {
    pub values: Vec<f64>,
    pub params: CentralityParams,
    pub iterations: usize,
    pub residual: f64,
    /// Resolved Katz attenuation, when applicable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<f64>,
    /// Perron eigenvalue, when the solver computed it.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda1: Option<f64>,
}

impl CentralityVector {
    fn exact(values: Vec<f64>, params: CentralityParams) -> Self {
        Self {
            values,
            params,
            iterations: 0,
            residual: 0.0,
            alpha: None,
            lambda1: None,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Copy with every score multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        let mut out = self.clone();
        for v in &mut out.values {
            *v *= c;
        }
        out
    }
}

/// Perron eigenpair of the adjacency matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda1: f64,
    /// Positive, L1-normalized.
    pub vector: Vec<f64>,
    /// `max_i |(A r)_i - lambda1 r_i|`.
    pub residual: f64,
    pub iterations: usize,
}

fn require_connected_undirected(g: &Graph, op: &str) -> Result<()> {
    g.require_undirected(op)?;
    g.require_irreducible()
}

/// Dispatch on `params.measure`.
pub fn compute(g: &Graph, params: &CentralityParams) -> Result<CentralityVector> {
    params.validate()?;
    match params.measure {
        Measure::Degree => degree_centrality(g),
        Measure::WalkCount { ell } => walk_count(g, ell),
        Measure::Eigenvector => eigenvector_centrality(g, params.tol, params.max_iters).map(|(_, r)| r),
        Measure::Katz { alpha } => {
            let alpha = match alpha {
                KatzAlpha::Fixed(a) => a,
                KatzAlpha::SpectralFraction(f) => {
                    if !(0.0..1.0).contains(&f) {
                        return Err(Error::Parameter(format!(
                            "Katz spectral fraction must lie in [0, 1), got {f}"
                        )));
                    }
                    let (s, _) = eigenvector_centrality(g, params.tol, params.max_iters)?;
                    f / s.lambda1
                }
            };
            let mut r = katz_centrality(g, alpha, params.tol, params.max_iters)?;
            r.params = *params;
            Ok(r)
        }
        Measure::PageRank { beta } => pagerank_centrality(g, beta, params.tol, params.max_iters),
        Measure::Closeness | Measure::Harmonic => closeness_harmonic(g, params.measure),
    }
    .map(|mut r| {
        r.params.tol = params.tol;
        r.params.max_iters = params.max_iters;
        r
    })
}

/// `r = A 1`.
pub fn degree_centrality(g: &Graph) -> Result<CentralityVector> {
    require_connected_undirected(g, "degree centrality")?;
    Ok(CentralityVector::exact(
        g.degrees_f64(),
        CentralityParams::new(Measure::Degree),
    ))
}

/// `r = A^ell 1`, exact while every count stays below 2^53.
pub fn walk_count(g: &Graph, ell: u32) -> Result<CentralityVector> {
    require_connected_undirected(g, "walk-count centrality")?;
    let mut r = vec![1.0; g.node_count()];
    for step in 0..ell {
        r = g.matvec_unchecked(&r);
        let peak = r.iter().copied().fold(0.0, f64::max);
        if peak > EXACT_FLOAT_LIMIT {
            return Err(Error::Range(format!("walk counts exceed 2^53 at length {}", step + 1)));
        }
    }
    Ok(CentralityVector::exact(
        r,
        CentralityParams::new(Measure::WalkCount { ell }),
    ))
}

/// Perron pair of `A` by power iteration on `A + I`, L1-normalized.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iters: usize) -> Result<(SpectralResult, CentralityVector)> {
    require_connected_undirected(g, "eigenvector centrality")?;
    let n = g.node_count();
    let mut r = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for iteration in 0..=max_iters {
        let ar = g.matvec_unchecked(&r);
        // sum(r) == 1, so the Rayleigh-type estimate is sum(A r)
        let lambda1: f64 = ar.iter().sum::<f64>() / r.iter().sum::<f64>();
        residual = ar
            .iter()
            .zip(&r)
            .map(|(a, x)| (a - lambda1 * x).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            let spectral = SpectralResult {
                lambda1,
                vector: r.clone(),
                residual,
                iterations: iteration,
            };
            let mut cv = CentralityVector::exact(r, CentralityParams::new(Measure::Eigenvector));
            cv.iterations = iteration;
            cv.residual = residual;
            cv.lambda1 = Some(lambda1);
            return Ok((spectral, cv));
        }
        if iteration == max_iters {
            break;
        }
        let mut next: Vec<f64> = ar.iter().zip(&r).map(|(a, x)| a + x).collect();
        let total: f64 = next.iter().sum();
        for v in &mut next {
            *v /= total;
        }
        r = next;
    }
    Err(Error::Convergence {
        iterations: max_iters,
        residual,
    })
}

/// `r = (I - alpha A)^{-1} 1` by Jacobi iteration `r <- 1 + alpha A r`.
pub fn katz_centrality(g: &Graph, alpha: f64, tol: f64, max_iters: usize) -> Result<CentralityVector> {
    require_connected_undirected(g, "Katz centrality")?;
    if !(alpha >= 0.0 && alpha.is_finite()) {
        return Err(Error::Parameter(format!("Katz alpha must be nonnegative, got {alpha}")));
    }
    // the admissibility bound gets its own budget, independent of the Katz sweep
    let lambda1 = eigenvector_centrality(g, tol, max_iters.max(DEFAULT_MAX_ITERS))?
        .0
        .lambda1;
    if alpha > (1.0 - KATZ_MARGIN) / lambda1 {
        return Err(Error::Parameter(format!(
            "Katz alpha = {alpha} must satisfy alpha * lambda_1 < 1 (lambda_1 = {lambda1}); \
             the walk series converges entrywise only because alpha * lambda_1 < 1"
        )));
    }
    let n = g.node_count();
    let mut r = vec![1.0; n];
    let mut residual = f64::INFINITY;
    for iteration in 0..=max_iters {
        let next: Vec<f64> = g.matvec_unchecked(&r).into_iter().map(|v| 1.0 + alpha * v).collect();
        residual = next.iter().zip(&r).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if residual <= tol {
            return Ok(CentralityVector {
                values: next,
                params: CentralityParams::new(Measure::Katz {
                    alpha: KatzAlpha::Fixed(alpha),
                }),
                iterations: iteration,
                residual,
                alpha: Some(alpha),
                lambda1: Some(lambda1),
            });
        }
        r = next;
    }
    Err(Error::Convergence {
        iterations: max_iters,
        residual,
    })
}

/// Left fixed point of `P = (1 - beta) C + (beta / n) 1 1^T`, normalized to sum 1.
///
/// Undirected graphs are treated as their bidirected equivalent, which has
/// the same CSR storage.
pub fn pagerank_centrality(g: &Graph, beta: f64, tol: f64, max_iters: usize) -> Result<CentralityVector> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Parameter(format!(
            "PageRank beta must lie in (0, 1), got {beta}"
        )));
    }
    g.require_irreducible()?;
    let n = g.node_count();
    let teleport = beta / n as f64;
    let step = |r: &[f64]| -> Result<Vec<f64>> {
        let ctr = g.apply_transition_transpose(r)?;
        let mass: f64 = r.iter().sum();
        Ok(ctr.into_iter().map(|v| (1.0 - beta) * v + teleport * mass).collect())
    };
    let mut r = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for iteration in 0..=max_iters {
        let next = step(&r)?;
        residual = next.iter().zip(&r).map(|(a, b)| (a - b).abs()).sum();
        if residual <= tol {
            return Ok(CentralityVector {
                values: r,
                params: CentralityParams::new(Measure::PageRank { beta }),
                iterations: iteration,
                residual,
                alpha: None,
                lambda1: None,
            });
        }
        let total: f64 = next.iter().sum();
        r = next.into_iter().map(|v| v / total).collect();
    }
    Err(Error::Convergence {
        iterations: max_iters,
        residual,
    })
}

/// `(n - 1) / sum_j dist(i, j)` or `sum_{j != i} 1 / dist(i, j)`.
pub fn closeness_harmonic(g: &Graph, kind: Measure) -> Result<CentralityVector> {
    if !matches!(kind, Measure::Closeness | Measure::Harmonic) {
        return Err(Error::Usage(format!(
            "closeness_harmonic expects closeness or harmonic, got {}",
            kind.name()
        )));
    }
    require_connected_undirected(g, "distance centrality")?;
    let n = g.node_count();
    let values = (0..n)
        .map(|i| {
            let dist = g.bfs_distances(i);
            let others = dist
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, d)| d.expect("connected") as f64);
            match kind {
                Measure::Closeness if n == 1 => 0.0,
                Measure::Closeness => (n - 1) as f64 / others.sum::<f64>(),
                _ => others.map(|d| 1.0 / d).sum(),
            }
        })
        .collect();
    Ok(CentralityVector::exact(values, CentralityParams::new(kind)))
}
