#![allow(dead_code)]

use paradox_lab::rng::SplitMix64;
use paradox_lab::Graph;

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 1..n {
        edges.push((rng.below_usize(i), i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::build_undirected(n, &edges).unwrap()
}

/// Random digraph containing a Hamiltonian cycle on a shuffled order,
/// so it is strongly connected, plus arcs with probability `p`.
pub fn random_strong_digraph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut arcs: Vec<(usize, usize)> = (0..n).map(|k| (order[k], order[(k + 1) % n])).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.chance(p) {
                arcs.push((i, j));
            }
        }
    }
    Graph::build_directed(n, &arcs).unwrap()
}
