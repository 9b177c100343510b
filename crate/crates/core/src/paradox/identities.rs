//! Identities and inequalities behind the per-measure paradox arguments.

use serde::{Deserialize, Serialize};

use crate::centrality::{CentralityVector, SpectralResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::MAX_DENSE_DIM;

/// Both sides of a check and whether its contract holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckPair {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

fn connected_undirected(g: &Graph, op: &str) -> Result<()> {
    g.require_undirected(op)?;
    g.require_irreducible()
}

/// `<1, C d> - <1, d>` against `1/2 sum_ij A_ij (sqrt(d_j/d_i) - sqrt(d_i/d_j))^2`.
pub fn symmetrization_identity(g: &Graph) -> Result<CheckPair> {
    connected_undirected(g, "symmetrization identity")?;
    let d = g.degrees_f64();
    let cd = g.apply_transition(&d)?;
    let lhs = cd.iter().sum::<f64>() - d.iter().sum::<f64>();
    let rhs = 0.5
        * g.entries()
            .map(|(i, j, c)| {
                let t = (d[j] / d[i]).sqrt() - (d[i] / d[j]).sqrt();
                f64::from(c) * t * t
            })
            .sum::<f64>();
    Ok(CheckPair {
        lhs,
        rhs,
        holds: (lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()),
    })
}

/// `sum_i r_i / d_i >= 1 / lambda_1` for the L1-normalized Perron vector.
pub fn harmonic_mean_check(g: &Graph, s: &SpectralResult) -> Result<CheckPair> {
    connected_undirected(g, "harmonic mean check")?;
    if s.vector.len() != g.node_count() {
        return Err(Error::Input("spectral vector length does not match the graph".into()));
    }
    let lhs = s.vector.iter().zip(g.degrees()).map(|(r, &d)| r / d as f64).sum();
    let rhs = 1.0 / s.lambda1;
    Ok(CheckPair {
        lhs,
        rhs,
        holds: lhs >= rhs - 1e-10,
    })
}

/// `sum_ij (1/d_i) W_ij d_j >= sum_ij W_ij` with `W = A^ell`, evaluated by `ell` sparse products.
pub fn eaves_check(g: &Graph, ell: u32) -> Result<CheckPair> {
    connected_undirected(g, "Eaves check")?;
    if ell == 0 {
        return Err(Error::Parameter("Eaves check needs ell >= 1".into()));
    }
    if g.node_count() > MAX_DENSE_DIM {
        return Err(Error::Range(format!(
            "Eaves check limited to n <= {MAX_DENSE_DIM}, got {}",
            g.node_count()
        )));
    }
    let d = g.degrees_f64();
    let mut wd = d.clone();
    let mut w1 = vec![1.0; g.node_count()];
    for _ in 0..ell {
        wd = g.adjacency_matvec(&wd)?;
        w1 = g.adjacency_matvec(&w1)?;
    }
    let lhs = wd.iter().zip(&d).map(|(a, b)| a / b).sum();
    let rhs: f64 = w1.iter().sum();
    Ok(CheckPair {
        lhs,
        rhs,
        holds: lhs >= rhs - 1e-9 * rhs,
    })
}

/// `<1, C r> >= 1` for a normalized PageRank vector.
pub fn pagerank_paradox_check(g: &Graph, r: &CentralityVector) -> Result<CheckPair> {
    let lhs = g.apply_transition(&r.values)?.iter().sum();
    Ok(CheckPair {
        lhs,
        rhs: 1.0,
        holds: lhs >= 1.0 - 1e-10,
    })
}
