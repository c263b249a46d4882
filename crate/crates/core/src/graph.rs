//! Explicit adjacency graphs and the reference shortest-path routines.
//!
//! Everything in this module is the oracle side of the crate: the class
//! modules never build an [`ExplicitGraph`] on their own hot paths, and the
//! test suites compare their distance rows against [`bfs_sssp`] and
//! [`dijkstra_sssp`] on the materialized graph.
//!
//! Vertex ids are 1-based at every public boundary.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Distances from one source vertex. `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    source: usize,
    dist: Vec<Option<u64>>,
}

impl DistanceRow {
    pub fn new(source: usize, dist: Vec<Option<u64>>) -> Self {
        Self { source, dist }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// Distance to vertex `v` (1-based).
    pub fn get(&self, v: usize) -> Option<u64> {
        self.dist[v - 1]
    }

    /// Entries in vertex order; index `k` holds vertex `k + 1`.
    pub fn as_slice(&self) -> &[Option<u64>] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn into_vec(self) -> Vec<Option<u64>> {
        self.dist
    }
}

/// Deterministic instrumentation for a single-source run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WorkCounter {
    pub vertex_visits: u64,
    pub layer_count: u64,
}

impl WorkCounter {
    #[inline]
    pub(crate) fn visit(&mut self) {
        self.vertex_visits += 1;
    }
}

/// Aggregate of the per-source [`WorkCounter`]s of an all-sources run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct WorkSummary {
    pub sources: u64,
    pub total_visits: u64,
    pub max_visits: u64,
    pub max_layers: u64,
    /// Largest `vertex_visits / layer_count` ratio seen, rounded up.
    pub max_visits_per_layer: u64,
}

impl WorkSummary {
    pub fn record(&mut self, c: &WorkCounter) {
        self.sources += 1;
        self.total_visits += c.vertex_visits;
        self.max_visits = self.max_visits.max(c.vertex_visits);
        self.max_layers = self.max_layers.max(c.layer_count);
        let per_layer = c.vertex_visits.div_ceil(c.layer_count.max(1));
        self.max_visits_per_layer = self.max_visits_per_layer.max(per_layer);
    }

    pub fn merge(mut self, other: WorkSummary) -> WorkSummary {
        self.sources += other.sources;
        self.total_visits += other.total_visits;
        self.max_visits = self.max_visits.max(other.max_visits);
        self.max_layers = self.max_layers.max(other.max_layers);
        self.max_visits_per_layer = self.max_visits_per_layer.max(other.max_visits_per_layer);
        self
    }
}

/// Anything that can answer single-source shortest-path queries on `1..=n`.
pub trait ShortestPaths: Sync {
    fn vertex_count(&self) -> usize;

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow>;

    fn sssp(&self, source: usize) -> Result<DistanceRow> {
        self.sssp_counted(source, &mut WorkCounter::default())
    }
}

pub(crate) fn check_source(source: usize, n: usize) -> Result<usize> {
    if source == 0 || source > n {
        Err(Error::InvalidVertex { vertex: source, n })
    } else {
        Ok(source - 1)
    }
}

/// Undirected simple graph in compressed adjacency form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGraph {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<u32>,
    /// Parallel to `targets`; empty when the graph is unweighted.
    weights: Vec<u64>,
    weighted: bool,
}

impl ExplicitGraph {
    /// Unit-weight graph from 1-based edge pairs.
    pub fn unweighted<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<(usize, usize, u64)> = edges.into_iter().map(|(u, v)| (u, v, 1)).collect();
        Self::build(n, &edges, false)
    }

    /// Weighted graph from 1-based `(u, v, w)` triples, `w >= 1`.
    pub fn weighted<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        Self::build(n, &edges, true)
    }

    fn build(n: usize, edges: &[(usize, usize, u64)], weighted: bool) -> Result<Self> {
        if n > u32::MAX as usize {
            return Err(Error::invalid("too many vertices"));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, w) in edges {
            for x in [u, v] {
                check_source(x, n)?;
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop",
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "duplicate edge",
                });
            }
            if w == 0 {
                return Err(Error::BadWeight { u, v, weight: w });
            }
        }
        Ok(Self::from_checked(
            n,
            edges.iter().map(|&(u, v, w)| (u - 1, v - 1, w)),
            weighted,
        ))
    }

    /// Builds the graph whose edges are exactly the pairs accepted by `adjacent`.
    /// The predicate receives 1-based ids with `i < j`.
    pub fn from_predicate<F>(n: usize, mut adjacent: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i + 1, j + 1) {
                    edges.push((i, j, 1));
                }
            }
        }
        Self::from_checked(n, edges.into_iter(), false)
    }

    /// Edges are 0-based, simple and unique.
    fn from_checked<I>(n: usize, edges: I, weighted: bool) -> Self
    where
        I: Iterator<Item = (usize, usize, u64)> + Clone,
    {
        let mut degree = vec![0usize; n + 1];
        for (u, v, _) in edges.clone() {
            degree[u + 1] += 1;
            degree[v + 1] += 1;
        }
        for i in 0..n {
            degree[i + 1] += degree[i];
        }
        let offsets = degree;
        let m2 = offsets[n];
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; m2];
        let mut weights = if weighted { vec![0u64; m2] } else { Vec::new() };
        for (u, v, w) in edges {
            for (x, y) in [(u, v), (v, u)] {
                let slot = fill[x];
                fill[x] += 1;
                targets[slot] = y as u32;
                if weighted {
                    weights[slot] = w;
                }
            }
        }
        Self {
            n,
            offsets,
            targets,
            weights,
            weighted,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Neighbors of `v` (1-based) with edge weights; weight 1 when unweighted.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        let range = self.offsets[v - 1]..self.offsets[v];
        range.map(move |k| {
            let w = if self.weighted { self.weights[k] } else { 1 };
            (self.targets[k] as usize + 1, w)
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v] - self.offsets[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).any(|(x, _)| x == v)
    }

    /// All edges with `u < v`, 1-based.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for (v, w) in self.neighbors(u) {
                if u < v {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    /// Renames vertex `v` to `perm[v - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::invalid("relabeling has the wrong length"));
        }
        let mapped = self
            .edges()
            .into_iter()
            .map(|(u, v, w)| (perm[u - 1], perm[v - 1], w));
        if !self.weighted {
            Self::unweighted(self.n, mapped.map(|(u, v, _)| (u, v)))
        } else {
            Self::weighted(self.n, mapped)
        }
    }
}

impl ShortestPaths for ExplicitGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        if !self.weighted {
            bfs_counted(self, source, work)
        } else {
            dijkstra_counted(self, source, work)
        }
    }
}

/// Hop-count distances from `source`, ignoring any stored weights.
pub fn bfs_sssp(g: &ExplicitGraph, source: usize) -> Result<DistanceRow> {
    bfs_counted(g, source, &mut WorkCounter::default())
}

fn bfs_counted(g: &ExplicitGraph, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
    let s = check_source(source, g.n)?;
    let mut dist = vec![None; g.n];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    let mut last_layer = 0;
    work.layer_count = 1;
    while let Some(u) = queue.pop_front() {
        work.visit();
        let du = dist[u].unwrap_or_default();
        if du > last_layer {
            last_layer = du;
            work.layer_count += 1;
        }
        for k in g.offsets[u]..g.offsets[u + 1] {
            work.visit();
            let v = g.targets[k] as usize;
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(DistanceRow::new(source, dist))
}

/// Exact weighted distances from `source` with a binary heap.
pub fn dijkstra_sssp(g: &ExplicitGraph, source: usize) -> Result<DistanceRow> {
    dijkstra_counted(g, source, &mut WorkCounter::default())
}

fn dijkstra_counted(
    g: &ExplicitGraph,
    source: usize,
    work: &mut WorkCounter,
) -> Result<DistanceRow> {
    let s = check_source(source, g.n)?;
    let mut dist: Vec<Option<u64>> = vec![None; g.n];
    let mut done = vec![false; g.n];
    dist[s] = Some(0);
    let mut heap = BinaryHeap::from([Reverse((0u64, s))]);
    while let Some(Reverse((du, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        work.visit();
        for k in g.offsets[u]..g.offsets[u + 1] {
            work.visit();
            let v = g.targets[k] as usize;
            let w = if g.weighted { g.weights[k] } else { 1 };
            let cand = du.checked_add(w).ok_or(Error::Overflow)?;
            if dist[v].is_none_or(|dv| cand < dv) {
                dist[v] = Some(cand);
                heap.push(Reverse((cand, v)));
            }
        }
    }
    work.layer_count = 1;
    Ok(DistanceRow::new(source, dist))
}
