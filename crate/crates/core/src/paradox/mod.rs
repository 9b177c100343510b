//! Neighbor-averaged statistics and the checks built on them.
//!
//! For a score vector `r` on a graph with degrees `d` and random-walk operator
//! `C = D^{-1} A`:
//!
//! * `mu       = (1/n) sum_i r_i`
//! * `mu_bar   = (1/n) sum_i (C r)_i`, the mean over nodes of the neighbor average
//! * `mu_tilde = <r, d> / <1, d>`, the score at the end of a uniformly sampled edge
//! * `delta_i  = (C r)_i - r_i`, the per-node bias

mod bias;
mod fiedler;
mod identities;

pub use bias::{
    bias_distribution, histogram, quantile, BiasDistribution, HistogramBin, QuantilePoint, QUANTILE_LEVELS,
};
pub use fiedler::{fiedler_check, FiedlerInstance, MAX_FIEDLER_DIM};
pub use identities::{eaves_check, harmonic_mean_check, pagerank_paradox_check, symmetrization_identity, CheckPair};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::centrality::{CentralityParams, CentralityVector};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute slack below which the two means count as equal.
pub const EQUALITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParadoxReport {
    pub measure: CentralityParams,
    pub mu: f64,
    pub mu_bar: f64,
    pub mu_tilde: f64,
    /// `mu_bar - mu`.
    pub slack: f64,
    pub delta: Vec<f64>,
    /// `b_j = d_j / sum_k d_k`, the stationary law of the walk.
    pub edge_weights: Vec<f64>,
    pub paradox_holds: bool,
    pub is_regular: bool,
}

/// Two routes to `mu_bar - mu_tilde`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonDecomposition {
    /// `a_j = sum_i A_ij / d_i`.
    pub a: Vec<f64>,
    /// `b_j = d_j / sum_k d_k`.
    pub b: Vec<f64>,
    pub mu_bar: f64,
    pub mu_tilde: f64,
    /// `mu_bar - mu_tilde`, computed directly.
    pub lhs: f64,
    /// `sum_j r_j (a_j / n - b_j)`.
    pub rhs: f64,
}

/// Degree statistics in exact rational arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactDegreeStats {
    pub mu: BigRational,
    pub mu_bar: BigRational,
    pub mu_tilde: BigRational,
}

impl ExactDegreeStats {
    pub fn to_strings(&self) -> ExactDegreeStrings {
        ExactDegreeStrings {
            mu: self.mu.to_string(),
            mu_bar: self.mu_bar.to_string(),
            mu_tilde: self.mu_tilde.to_string(),
        }
    }
}

/// Rationals rendered as `p/q` (or `p` when integral).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactDegreeStrings {
    pub mu: String,
    pub mu_bar: String,
    pub mu_tilde: String,
}

fn check_dims(g: &Graph, r: &CentralityVector) -> Result<()> {
    if r.len() != g.node_count() {
        return Err(Error::Input(format!(
            "centrality has {} entries, graph has {} nodes",
            r.len(),
            g.node_count()
        )));
    }
    Ok(())
}

/// `(C r)_i`, the mean score over the (out-)neighbors of each node.
pub fn neighbor_average(g: &Graph, r: &CentralityVector) -> Result<Vec<f64>> {
    check_dims(g, r)?;
    g.apply_transition(&r.values)
}

fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

fn degree_weights(g: &Graph) -> Vec<f64> {
    let total: u64 = g.degrees().iter().sum();
    g.degrees().iter().map(|&d| d as f64 / total as f64).collect()
}

fn edge_sampled_mean(g: &Graph, r: &[f64]) -> f64 {
    let total: u64 = g.degrees().iter().sum();
    let weighted: f64 = r.iter().zip(g.degrees()).map(|(x, &d)| x * d as f64).sum();
    weighted / total as f64
}

pub fn paradox_report(g: &Graph, r: &CentralityVector) -> Result<ParadoxReport> {
    let averaged = neighbor_average(g, r)?;
    let mu = mean(&r.values);
    let mu_bar = mean(&averaged);
    let slack = mu_bar - mu;
    let delta = averaged.iter().zip(&r.values).map(|(a, x)| a - x).collect();
    Ok(ParadoxReport {
        measure: r.params,
        mu,
        mu_bar,
        mu_tilde: edge_sampled_mean(g, &r.values),
        slack,
        delta,
        edge_weights: degree_weights(g),
        paradox_holds: slack >= -EQUALITY_TOL,
        is_regular: g.is_regular(),
    })
}

pub fn compare_averages(g: &Graph, r: &CentralityVector) -> Result<ComparisonDecomposition> {
    check_dims(g, r)?;
    g.require_irreducible()?;
    let n = g.node_count();
    let mut a = vec![0.0; n];
    for (i, j, c) in g.entries() {
        a[j] += f64::from(c) / g.degree(i) as f64;
    }
    let b = degree_weights(g);
    let mu_bar = mean(&g.apply_transition(&r.values)?);
    let mu_tilde = edge_sampled_mean(g, &r.values);
    let rhs = r
        .values
        .iter()
        .zip(a.iter().zip(&b))
        .map(|(rj, (aj, bj))| rj * (aj / n as f64 - bj))
        .sum();
    Ok(ComparisonDecomposition {
        a,
        b,
        mu_bar,
        mu_tilde,
        lhs: mu_bar - mu_tilde,
        rhs,
    })
}

/// `mu_d`, `mu_bar_d` and `mu_tilde_d` with no rounding.
pub fn exact_degree_stats(g: &Graph) -> Result<ExactDegreeStats> {
    g.require_irreducible()?;
    let n = BigInt::from(g.node_count());
    let int = |v: u64| BigRational::from_integer(BigInt::from(v));
    let degree_sum: u64 = g.degrees().iter().sum();
    let square_sum: u64 = g.degrees().iter().map(|&d| d * d).sum();

    let mut neighbor_sum = BigRational::zero();
    for i in 0..g.node_count() {
        let row: u64 = g.neighbors(i).map(|(j, c)| u64::from(c) * g.degree(j)).sum();
        neighbor_sum += BigRational::new(BigInt::from(row), BigInt::from(g.degree(i)));
    }
    let per_node = BigRational::from_integer(n);
    Ok(ExactDegreeStats {
        mu: int(degree_sum) / per_node.clone(),
        mu_bar: neighbor_sum / per_node,
        mu_tilde: int(square_sum) / int(degree_sum),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::{self, Measure, DEFAULT_MAX_ITERS, DEFAULT_TOL};
    use crate::generators::{generate, Model, RandomGraphSpec};

    fn family(model: Model, n: usize) -> Graph {
        generate(&RandomGraphSpec::new(model, n)).unwrap()
    }

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn neighbor_average_examples() {
        let c = family(Model::Cycle, 6);
        let d = centrality::degree_centrality(&c).unwrap();
        assert_eq!(neighbor_average(&c, &d).unwrap(), vec![2.0; 6]);

        let p6 = family(Model::Path, 6);
        let d = centrality::degree_centrality(&p6).unwrap();
        assert_eq!(neighbor_average(&p6, &d).unwrap(), vec![2.0, 1.5, 2.0, 2.0, 1.5, 2.0]);

        let star = family(Model::Star, 7);
        let d = centrality::degree_centrality(&star).unwrap();
        let avg = neighbor_average(&star, &d).unwrap();
        assert_eq!(avg[0], 1.0);
        assert!(avg[1..].iter().all(|&v| v == 6.0));
    }

    #[test]
    fn path_six_degree_report() {
        let g = family(Model::Path, 6);
        let rep = paradox_report(&g, &centrality::degree_centrality(&g).unwrap()).unwrap();
        assert!((rep.mu_bar - 11.0 / 6.0).abs() < 1e-12);
        assert!((rep.mu - 10.0 / 6.0).abs() < 1e-12);
        assert!(rep.paradox_holds && !rep.is_regular);

        let exact = exact_degree_stats(&g).unwrap();
        assert_eq!(exact.mu_bar, ratio(11, 6));
        assert_eq!(exact.mu, ratio(5, 3));
        assert_eq!(exact.mu_tilde, ratio(18, 10));
        assert_eq!(exact.to_strings().mu_bar, "11/6");
    }

    #[test]
    fn path_six_eigenvector_report() {
        let g = family(Model::Path, 6);
        let (s, r) = centrality::eigenvector_centrality(&g, DEFAULT_TOL, DEFAULT_MAX_ITERS).unwrap();
        let rep = paradox_report(&g, &r).unwrap();
        assert!((rep.mu_bar - 0.1799).abs() < 5e-4);
        assert!((rep.mu - 1.0 / 6.0).abs() < 1e-12);
        assert!(rep.paradox_holds);
        assert!((rep.mu_tilde - s.lambda1 / 10.0).abs() < 1e-9);
        assert!(rep.mu_bar < rep.mu_tilde);
    }

    #[test]
    fn complete_graph_is_exact_equality() {
        let g = family(Model::Complete, 6);
        for m in [Measure::Degree, Measure::Eigenvector, Measure::PageRank { beta: 0.15 }] {
            let r = centrality::compute(&g, &CentralityParams::new(m)).unwrap();
            let rep = paradox_report(&g, &r).unwrap();
            assert!(rep.slack.abs() <= EQUALITY_TOL);
            assert!(rep.is_regular && rep.paradox_holds);
        }
    }

    #[test]
    fn star_comparison() {
        let g = family(Model::Star, 5);
        let cmp = compare_averages(&g, &centrality::degree_centrality(&g).unwrap()).unwrap();
        assert!((cmp.mu_tilde - 2.5).abs() < 1e-12);
        assert!((cmp.mu_bar - 3.4).abs() < 1e-12);
        assert!((cmp.lhs - cmp.rhs).abs() < 1e-12);
    }

    #[test]
    fn regular_comparison_vanishes() {
        let g = family(Model::Cycle, 9);
        let cmp = compare_averages(&g, &centrality::walk_count(&g, 3).unwrap()).unwrap();
        assert!(cmp.lhs.abs() < 1e-12 && cmp.rhs.abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let g = family(Model::Path, 4);
        let r = centrality::degree_centrality(&family(Model::Path, 5)).unwrap();
        assert!(matches!(paradox_report(&g, &r), Err(Error::Input(_))));
        assert!(matches!(compare_averages(&g, &r), Err(Error::Input(_))));
    }

    #[test]
    fn directed_edge_mean_uses_out_degrees() {
        let g = Graph::build_directed(3, &[(0, 1), (0, 2), (1, 0), (2, 0)]).unwrap();
        let r = centrality::pagerank_centrality(&g, 0.15, DEFAULT_TOL, DEFAULT_MAX_ITERS).unwrap();
        let rep = paradox_report(&g, &r).unwrap();
        let expect = (2.0 * r.values[0] + r.values[1] + r.values[2]) / 4.0;
        assert!((rep.mu_tilde - expect).abs() < 1e-15);
        assert!(rep.slack > 0.0);
    }
}
