//! Sampled test of the Perron bilinear bound: for a nonnegative irreducible
//! `P` with Perron triple `(lambda, u, v)` and any positive `x, y` with
//! `x ∘ y = u ∘ v`, `y^T P x >= lambda`, with equality iff `x ∝ u`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{dense_perron, DenseMatrix};
use crate::rng::SplitMix64;

pub const MAX_FIEDLER_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiedlerInstance {
    pub lambda: f64,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// `y^T P x`.
    pub value: f64,
    /// True for the trial with `x` proportional to `u`.
    pub forced_equality: bool,
}

impl FiedlerInstance {
    /// `value - lambda`.
    pub fn gap(&self) -> f64 {
        self.value - self.lambda
    }
}

/// Trial 0 sets `x = c u` for a random scale `c`; the rest draw each `x_i`
/// log-uniformly from `[0.1, 10]`. Always `y = (u ∘ v) / x`.
pub fn fiedler_check(p: &DenseMatrix, trials: usize, seed: u64) -> Result<Vec<FiedlerInstance>> {
    let n = p.dim();
    if n > MAX_FIEDLER_DIM {
        return Err(Error::Range(format!(
            "Fiedler check limited to n <= {MAX_FIEDLER_DIM}, got {n}"
        )));
    }
    if trials == 0 {
        return Err(Error::Parameter("at least one trial is required".into()));
    }
    let perron = dense_perron(p, 1e-14)?;
    let uv: Vec<f64> = perron.u.iter().zip(&perron.v).map(|(a, b)| a * b).collect();
    let mut rng = SplitMix64::new(seed);
    let log_uniform = |rng: &mut SplitMix64| 10f64.powf(2.0 * rng.next_f64() - 1.0);

    let mut out = Vec::with_capacity(trials);
    for trial in 0..trials {
        let forced = trial == 0;
        let x: Vec<f64> = if forced {
            let c = log_uniform(&mut rng);
            perron.u.iter().map(|ui| c * ui).collect()
        } else {
            (0..n).map(|_| log_uniform(&mut rng)).collect()
        };
        let y: Vec<f64> = uv.iter().zip(&x).map(|(w, xi)| w / xi).collect();
        out.push(FiedlerInstance {
            lambda: perron.lambda,
            u: perron.u.clone(),
            v: perron.v.clone(),
            value: p.bilinear(&y, &x),
            x,
            y,
            forced_equality: forced,
        });
    }
    Ok(out)
}
