//! Immutable compressed-sparse-row graphs.
//!
//! Entries carry positive integer multiplicities so that `A_ij` counts the
//! edges between `i` and `j`. Undirected graphs store both orientations of
//! every edge; directed graphs store only `i -> j`. The random-walk operator
//! `C = D^{-1} A` is never materialized: [`Graph::apply_transition`] applies it.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// Sparse adjacency with degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edge_count: usize,
    directed: bool,
    row_offsets: Vec<usize>,
    column_targets: Vec<usize>,
    multiplicities: Vec<u32>,
    degree_seq: Vec<u64>,
}

impl Graph {
    /// Undirected multigraph from an edge list. Repeated pairs add multiplicity.
    pub fn build_undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, false)
    }

    /// Directed multigraph storing each pair as `i -> j`.
    pub fn build_directed(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize)], directed: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("graph must have at least one node".into()));
        }
        let mut rows: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new(); n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            if i >= n || j >= n {
                return Err(Error::Input(format!(
                    "edge #{k} ({i}, {j}) references a node outside 0..{n}"
                )));
            }
            if i == j {
                return Err(Error::Input(format!("edge #{k} is a self-loop at node {i}")));
            }
            *rows[i].entry(j).or_insert(0) += 1;
            if !directed {
                *rows[j].entry(i).or_insert(0) += 1;
            }
        }

        let mut row_offsets = Vec::with_capacity(n + 1);
        let mut column_targets = Vec::new();
        let mut multiplicities = Vec::new();
        let mut degree_seq = Vec::with_capacity(n);
        row_offsets.push(0);
        for row in rows {
            let mut degree = 0u64;
            for (j, c) in row {
                column_targets.push(j);
                multiplicities.push(c);
                degree += u64::from(c);
            }
            degree_seq.push(degree);
            row_offsets.push(column_targets.len());
        }

        Ok(Self {
            node_count: n,
            edge_count: edges.len(),
            directed,
            row_offsets,
            column_targets,
            multiplicities,
            degree_seq,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of edges, counting multiplicity; undirected edges count once.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn row_offsets(&self) -> &[usize] {
        &self.row_offsets
    }

    pub fn column_targets(&self) -> &[usize] {
        &self.column_targets
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Degrees (out-degrees for directed graphs).
    pub fn degrees(&self) -> &[u64] {
        &self.degree_seq
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degree_seq[i]
    }

    pub fn degrees_f64(&self) -> Vec<f64> {
        self.degree_seq.iter().map(|&d| d as f64).collect()
    }

    /// Stored neighbors of `i` with multiplicity.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let range = self.row_offsets[i]..self.row_offsets[i + 1];
        self.column_targets[range.clone()]
            .iter()
            .copied()
            .zip(self.multiplicities[range].iter().copied())
    }

    /// Every stored `(i, j, multiplicity)` entry in row order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.node_count).flat_map(move |i| self.neighbors(i).map(move |(j, c)| (i, j, c)))
    }

    /// Edge list with multiplicity expanded. Undirected edges appear once with `i < j`.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (i, j, c) in self.entries() {
            if self.directed || i < j {
                out.extend(std::iter::repeat_n((i, j), c as usize));
            }
        }
        out
    }

    /// True when every node has the same degree.
    pub fn is_regular(&self) -> bool {
        self.degree_seq.windows(2).all(|w| w[0] == w[1])
    }

    /// Directed graph carrying both orientations of every edge. Undirected
    /// input keeps its storage; directed input gains the reverse of each arc.
    pub fn to_bidirected(&self) -> Graph {
        if !self.directed {
            let mut g = self.clone();
            g.directed = true;
            g.edge_count = self.multiplicities.iter().map(|&c| c as usize).sum();
            return g;
        }
        let mut edges = self.edge_list();
        edges.extend(self.edge_list().into_iter().map(|(i, j)| (j, i)));
        Graph::build_directed(self.node_count, &edges).expect("mirrored arcs stay valid")
    }

    /// Whether a single traversal from node 0 reaches every node.
    pub fn is_connected(&self) -> Result<bool> {
        if self.directed {
            return Err(Error::Usage(
                "is_connected expects an undirected graph; use is_strongly_connected".into(),
            ));
        }
        Ok(self.reach_count_from_zero(false) == self.node_count)
    }

    /// Forward and reverse reachability from node 0.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        if !self.directed {
            return Err(Error::Usage(
                "is_strongly_connected expects a directed graph; use is_connected".into(),
            ));
        }
        Ok(self.reach_count_from_zero(false) == self.node_count && self.reach_count_from_zero(true) == self.node_count)
    }

    /// Connectivity in the sense the graph's orientation calls for.
    pub fn is_irreducible(&self) -> bool {
        if self.directed {
            self.is_strongly_connected().unwrap_or(false)
        } else {
            self.is_connected().unwrap_or(false)
        }
    }

    pub(crate) fn require_irreducible(&self) -> Result<()> {
        if self.is_irreducible() {
            Ok(())
        } else if self.directed {
            Err(Error::Precondition("graph must be strongly connected".into()))
        } else {
            Err(Error::Precondition("graph must be connected".into()))
        }
    }

    pub(crate) fn require_undirected(&self, op: &str) -> Result<()> {
        if self.directed {
            Err(Error::Usage(format!("{op} requires an undirected graph")))
        } else {
            Ok(())
        }
    }

    fn reach_count_from_zero(&self, reverse: bool) -> usize {
        let adjacency: Vec<Vec<usize>> = if reverse {
            let mut rev = vec![Vec::new(); self.node_count];
            for (i, j, _) in self.entries() {
                rev[j].push(i);
            }
            rev
        } else {
            Vec::new()
        };
        let mut seen = vec![false; self.node_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            let next: Box<dyn Iterator<Item = usize>> = if reverse {
                Box::new(adjacency[i].iter().copied())
            } else {
                Box::new(self.neighbors(i).map(|(j, _)| j))
            };
            for j in next {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count
    }

    /// Breadth-first hop distances from `source`; `None` for unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(i) = queue.pop_front() {
            let di = dist[i].unwrap_or_default();
            for (j, _) in self.neighbors(i) {
                if dist[j].is_none() {
                    dist[j] = Some(di + 1);
                    queue.push_back(j);
                }
            }
        }
        dist
    }

    /// Connected components of an undirected graph, largest first (ties by smallest node).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.node_count];
        let mut comps = Vec::new();
        for start in 0..self.node_count {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < members.len() {
                let i = members[head];
                head += 1;
                for (j, _) in self.neighbors(i) {
                    if label[j] == usize::MAX {
                        label[j] = id;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        comps
    }

    /// Induced subgraph on `nodes`, relabelled `0..nodes.len()` in the given order.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.node_count];
        for (new, &old) in nodes.iter().enumerate() {
            index[old] = new;
        }
        let mut edges = Vec::new();
        for (i, j, c) in self.entries() {
            if index[i] == usize::MAX || index[j] == usize::MAX || (!self.directed && i > j) {
                continue;
            }
            edges.extend(std::iter::repeat_n((index[i], index[j]), c as usize));
        }
        Self::build(nodes.len(), &edges, self.directed)
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() == self.node_count {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "vector has length {}, graph has {} nodes",
                x.len(),
                self.node_count
            )))
        }
    }

    /// `y = A x`, multiplicities included.
    pub fn adjacency_matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        Ok(self.matvec_unchecked(x))
    }

    pub(crate) fn matvec_unchecked(&self, x: &[f64]) -> Vec<f64> {
        (0..self.node_count)
            .map(|i| self.neighbors(i).map(|(j, c)| f64::from(c) * x[j]).sum::<f64>())
            .collect()
    }

    /// `y = A^T x`, computed by scattering rows.
    pub fn adjacency_transpose_matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        let mut y = vec![0.0; self.node_count];
        for (i, j, c) in self.entries() {
            y[j] += f64::from(c) * x[i];
        }
        Ok(y)
    }

    fn require_positive_degrees(&self) -> Result<()> {
        if self.degree_seq.contains(&0) {
            let what = if self.directed {
                "graph must be strongly connected (found a node with zero out-degree)"
            } else {
                "graph must be connected (found an isolated node)"
            };
            return Err(Error::Precondition(what.into()));
        }
        Ok(())
    }

    /// `C x = D^{-1} A x`.
    pub fn apply_transition(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        self.require_positive_degrees()?;
        let mut y = self.matvec_unchecked(x);
        for (yi, &d) in y.iter_mut().zip(&self.degree_seq) {
            *yi /= d as f64;
        }
        Ok(y)
    }

    /// `C^T x = A^T D^{-1} x`.
    pub fn apply_transition_transpose(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        self.require_positive_degrees()?;
        let scaled: Vec<f64> = x.iter().zip(&self.degree_seq).map(|(xi, &d)| xi / d as f64).collect();
        self.adjacency_transpose_matvec(&scaled)
    }
}
