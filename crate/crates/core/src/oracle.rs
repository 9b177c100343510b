//! Dense brute-force reference routines.
//!
//! Deliberately slow and obvious: full dense storage, pivoted elimination,
//! exhaustive walk enumeration. Used to cross-check the sparse solvers and
//! to derive expected values for tests.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_DENSE_DIM: usize = 512;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DENSE_DIM {
            return Err(Error::Range(format!("dense dimension {n} outside 1..={MAX_DENSE_DIM}")));
        }
        Ok(Self {
            n,
            entries: vec![0.0; n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(Error::Input(format!("entry ({i}, {j}) is not finite")));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self {
            n,
            entries: vec![0.0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// `y^T M x`.
    pub fn bilinear(&self, y: &[f64], x: &[f64]) -> f64 {
        y.iter().zip(self.matvec(x)).map(|(a, b)| a * b).sum()
    }

    /// Strong connectivity of the support pattern (entries > 0, diagonal ignored).
    pub fn is_irreducible(&self) -> bool {
        let reach = |transposed: bool| {
            let mut seen = vec![false; self.n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for j in 0..self.n {
                    let v = if transposed { self.get(j, i) } else { self.get(i, j) };
                    if v > 0.0 && !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(false) && reach(true)
    }
}

/// `A` as a dense matrix, multiplicities as entries.
pub fn dense_from_graph(g: &Graph) -> Result<DenseMatrix> {
    let mut m = DenseMatrix::zeros(g.node_count())?;
    for (i, j, c) in g.entries() {
        m.set(i, j, f64::from(c));
    }
    Ok(m)
}

/// Number of length-`ell` walks starting at each node, by depth-first enumeration.
pub fn enumerate_walks(g: &Graph, ell: usize) -> Result<Vec<u64>> {
    if g.node_count() > 12 || ell > 5 {
        return Err(Error::Range(format!(
            "walk enumeration limited to n <= 12 and length <= 5 (got n = {}, length = {ell})",
            g.node_count()
        )));
    }
    fn walk(g: &Graph, at: usize, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for (j, c) in g.neighbors(at) {
            // each parallel edge is a distinct walk step
            for _ in 0..c {
                total += walk(g, j, remaining - 1);
            }
        }
        total
    }
    Ok((0..g.node_count()).map(|i| walk(g, i, ell)).collect())
}

/// Gaussian elimination with partial pivoting.
pub fn dense_solve(m: &DenseMatrix, b: &[f64]) -> Result<Vec<f64>> {
    let n = m.dim();
    if b.len() != n {
        return Err(Error::Input(format!("rhs has length {}, matrix is {n}x{n}", b.len())));
    }
    let mut a = m.clone();
    let mut x = b.to_vec();
    let scale = m.entries.iter().fold(0.0f64, |s, v| s.max(v.abs()));
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a.get(p, col).abs().total_cmp(&a.get(q, col).abs()))
            .unwrap_or(col);
        if a.get(pivot, col).abs() <= 1e-14 * scale.max(1.0) {
            return Err(Error::Numerical(format!("matrix is singular at column {col}")));
        }
        if pivot != col {
            for j in 0..n {
                let tmp = a.get(col, j);
                a.set(col, j, a.get(pivot, j));
                a.set(pivot, j, tmp);
            }
            x.swap(col, pivot);
        }
        let p = a.get(col, col);
        for row in col + 1..n {
            let factor = a.get(row, col) / p;
            if factor == 0.0 {
                continue;
            }
            for j in col..n {
                a.set(row, j, a.get(row, j) - factor * a.get(col, j));
            }
            x[row] -= factor * x[col];
        }
    }
    for col in (0..n).rev() {
        let mut s = x[col];
        for j in col + 1..n {
            s -= a.get(col, j) * x[j];
        }
        x[col] = s / a.get(col, col);
    }
    Ok(x)
}

/// Perron triple of a dense nonnegative irreducible matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePerron {
    pub lambda: f64,
    /// Right eigenvector, L1-normalized.
    pub u: Vec<f64>,
    /// Left eigenvector, scaled so that `v^T u = 1`.
    pub v: Vec<f64>,
}

const DENSE_PERRON_MAX_ITERS: usize = 2_000_000;

/// Shifted power iteration on `M + I` and on its transpose.
pub fn dense_perron(m: &DenseMatrix, tol: f64) -> Result<DensePerron> {
    if m.entries.iter().any(|&v| v < 0.0) {
        return Err(Error::Input("matrix has negative entries".into()));
    }
    if !m.is_irreducible() {
        return Err(Error::Input("matrix is reducible".into()));
    }
    let (lambda, u) = shifted_power(m, tol)?;
    let (_, mut v) = shifted_power(&m.transpose(), tol)?;
    let vu: f64 = v.iter().zip(&u).map(|(a, b)| a * b).sum();
    for vi in &mut v {
        *vi /= vu;
    }
    Ok(DensePerron { lambda, u, v })
}

fn shifted_power(m: &DenseMatrix, tol: f64) -> Result<(f64, Vec<f64>)> {
    let n = m.dim();
    let mut x = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for _ in 0..DENSE_PERRON_MAX_ITERS {
        let mx = m.matvec(&x);
        let lambda: f64 = mx.iter().sum::<f64>() / x.iter().sum::<f64>();
        residual = mx
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok((lambda, x));
        }
        let mut next: Vec<f64> = mx.iter().zip(&x).map(|(a, b)| a + b).collect();
        let s: f64 = next.iter().sum();
        for v in &mut next {
            *v /= s;
        }
        x = next;
    }
    Err(Error::Convergence {
        iterations: DENSE_PERRON_MAX_ITERS,
        residual,
    })
}
