//! Deterministic graph families and seeded random-graph models.
//!
//! Every random model draws from [`SplitMix64`] seeded with `spec.seed`, so a
//! spec always reproduces the same edge list.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Retry budget for rejected samples (disconnected ensemble draws).
pub const MAX_RETRIES: usize = 100;
/// Retry budget for simple k-regular pairings; acceptance odds fall like exp(-(k^2 - 1) / 4).
pub const K_REGULAR_RETRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    Path,
    Cycle,
    /// Node 0 is the center.
    Star,
    Complete,
    KRegular {
        k: usize,
    },
    ErdosRenyi {
        p: f64,
    },
    /// Erased configuration model; `n` must equal the sequence length.
    Configuration {
        degree_sequence: Vec<usize>,
    },
    PreferentialAttachment {
        m_attach: usize,
    },
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Path => "path",
            Model::Cycle => "cycle",
            Model::Star => "star",
            Model::Complete => "complete",
            Model::KRegular { .. } => "k_regular",
            Model::ErdosRenyi { .. } => "erdos_renyi",
            Model::Configuration { .. } => "configuration",
            Model::PreferentialAttachment { .. } => "preferential_attachment",
        }
    }

    pub fn is_random(&self) -> bool {
        !matches!(self, Model::Path | Model::Cycle | Model::Star | Model::Complete)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphSpec {
    #[serde(flatten)]
    pub model: Model,
    pub n: usize,
    pub seed: u64,
    /// Return only the largest connected component, re-indexed.
    pub lcc_extract: bool,
}

impl RandomGraphSpec {
    /// Seed 0; largest-component extraction on for Erdős–Rényi only.
    pub fn new(model: Model, n: usize) -> Self {
        let lcc_extract = matches!(model, Model::ErdosRenyi { .. });
        Self {
            model,
            n,
            seed: 0,
            lcc_extract,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_lcc(mut self, lcc_extract: bool) -> Self {
        self.lcc_extract = lcc_extract;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let bad = |msg: String| Err(Error::Parameter(msg));
        match &self.model {
            Model::Path | Model::Star | Model::Complete if n < 1 => bad("n must be at least 1".into()),
            Model::Cycle if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Model::KRegular { k } if *k >= n => bad(format!("k = {k} must be below n = {n}")),
            Model::KRegular { k } if (k * n) % 2 == 1 => bad(format!("k * n must be even (k = {k}, n = {n})")),
            Model::ErdosRenyi { p } if !(0.0..=1.0).contains(p) => bad(format!("p must lie in [0, 1], got {p}")),
            Model::ErdosRenyi { .. } if n < 1 => bad("n must be at least 1".into()),
            Model::Configuration { degree_sequence } if degree_sequence.len() != n => bad(format!(
                "degree sequence has {} entries, n = {n}",
                degree_sequence.len()
            )),
            Model::Configuration { degree_sequence } if degree_sequence.iter().sum::<usize>() % 2 == 1 => {
                bad("degree sequence must have an even sum".into())
            }
            Model::Configuration { .. } if n < 1 => bad("n must be at least 1".into()),
            Model::PreferentialAttachment { m_attach } if *m_attach < 1 => bad("m_attach must be at least 1".into()),
            Model::PreferentialAttachment { m_attach } if *m_attach >= n => {
                bad(format!("m_attach = {m_attach} must be below n = {n}"))
            }
            _ => Ok(()),
        }
    }
}

/// Build the graph described by `spec`.
pub fn generate(spec: &RandomGraphSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = SplitMix64::new(spec.seed);
    let edges: Vec<(usize, usize)> = match &spec.model {
        Model::Path => (1..n).map(|i| (i - 1, i)).collect(),
        Model::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        Model::Star => (1..n).map(|i| (0, i)).collect(),
        Model::Complete => complete_edges(n),
        Model::KRegular { k } => k_regular(n, *k, &mut rng)?,
        Model::ErdosRenyi { p } => erdos_renyi(n, *p, &mut rng),
        Model::Configuration { degree_sequence } => erased_configuration(degree_sequence, &mut rng),
        Model::PreferentialAttachment { m_attach } => preferential_attachment(n, *m_attach, &mut rng),
    };
    let g = Graph::build_undirected(n, &edges)?;
    if spec.lcc_extract {
        let comps = g.components();
        if comps[0].len() < n {
            return g.induced_subgraph(&comps[0]);
        }
    }
    Ok(g)
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    edges
}

/// One Bernoulli(p) draw per unordered pair, in lexicographic order.
fn erdos_renyi(n: usize, p: f64, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(p) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Shuffled half-edge stubs paired consecutively.
fn pair_stubs(degrees: &[usize], rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut stubs: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| std::iter::repeat_n(i, d))
        .collect();
    rng.shuffle(&mut stubs);
    stubs.chunks_exact(2).map(|c| (c[0], c[1])).collect()
}

/// Pairing with self-loops dropped and parallel edges collapsed.
fn erased_configuration(degrees: &[usize], rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = pair_stubs(degrees, rng)
        .into_iter()
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Configuration-model pairings rejected until simple.
fn k_regular(n: usize, k: usize, rng: &mut SplitMix64) -> Result<Vec<(usize, usize)>> {
    let degrees = vec![k; n];
    for _ in 0..K_REGULAR_RETRIES {
        let mut edges: Vec<(usize, usize)> = pair_stubs(&degrees, rng)
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        if edges.iter().any(|(a, b)| a == b) {
            continue;
        }
        edges.sort_unstable();
        let before = edges.len();
        edges.dedup();
        if edges.len() == before {
            return Ok(edges);
        }
    }
    Err(Error::Generation(format!(
        "no simple {k}-regular pairing on {n} nodes after {K_REGULAR_RETRIES} attempts"
    )))
}

/// Seed clique on `m + 1` nodes; each new node picks `m` distinct targets from
/// the repeated-endpoints list, so selection is proportional to degree.
fn preferential_attachment(n: usize, m: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    let mut edges = complete_edges(m + 1);
    let mut endpoints: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    for new in m + 1..n {
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let t = endpoints[rng.below_usize(endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            edges.push((t, new));
            endpoints.push(t);
            endpoints.push(new);
        }
    }
    edges
}

/// Per-node shortfall `target - realized` after erasing loops and parallel edges.
pub fn configuration_deviation(target: &[usize], realized: &Graph) -> Vec<i64> {
    target
        .iter()
        .zip(realized.degrees())
        .map(|(&t, &d)| t as i64 - d as i64)
        .collect()
}
