//! Weighted cactus graphs.
//!
//! [`validate_cactus`] splits the graph into biconnected blocks with one
//! iterative depth-first pass and an edge stack, and rejects any block that is
//! neither a single edge nor a simple cycle. Each cycle block stores its
//! vertices in cyclic order together with clockwise prefix weights, so the
//! distance between two of its vertices is `min(cw, total - cw)` in `O(1)`.
//!
//! [`cactus_sssp`] walks the block-cut tree outward from the source. A block is
//! entered through exactly one vertex (the one nearest the source), and every
//! other vertex of the block gets its distance from that entry point.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{check_source, DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter};
use crate::wiener::{wiener_index, WienerValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CactusRep {
    n: usize,
    edges: Vec<(usize, usize, u64)>,
}

impl CactusRep {
    /// Checks well-formedness only: ids in `1..=n`, no self-loops, no
    /// repeated vertex pairs, weights at least 1. Cactus structure is checked
    /// by [`validate_cactus`].
    pub fn new(n: usize, edges: Vec<(usize, usize, u64)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a cactus needs at least one vertex"));
        }
        if n > u32::MAX as usize {
            return Err(Error::invalid("too many vertices"));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, w) in &edges {
            check_source(u, n)?;
            check_source(v, n)?;
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
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Same structure with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v, w)| {
                w.checked_mul(factor)
                    .map(|w| (u, v, w))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<_>>()?;
        Self::new(self.n, edges)
    }

    pub fn to_explicit(&self) -> ExplicitGraph {
        ExplicitGraph::weighted(self.n, self.edges.iter().copied())
            .expect("CactusRep is well-formed")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Edge {
        u: usize,
        v: usize,
        weight: u64,
    },
    Cycle {
        /// Vertices in cyclic order.
        vertices: Vec<usize>,
        /// `prefix[t]` is the weight walked from `vertices[0]` to
        /// `vertices[t]` along the stored order; `prefix[0] = 0`.
        prefix: Vec<u64>,
        total: u64,
    },
}

impl Block {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Block::Edge { u, v, .. } => vec![*u, *v],
            Block::Cycle { vertices, .. } => vertices.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Block::Edge { .. } => 2,
            Block::Cycle { vertices, .. } => vertices.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distance inside the block between the vertices at positions `x`, `y`.
    fn inner_distance(&self, x: usize, y: usize) -> u64 {
        match self {
            Block::Edge { weight, .. } => {
                if x == y {
                    0
                } else {
                    *weight
                }
            }
            Block::Cycle { prefix, total, .. } => {
                let cw = if y >= x {
                    prefix[y] - prefix[x]
                } else {
                    total - (prefix[x] - prefix[y])
                };
                cw.min(total - cw)
            }
        }
    }
}

/// Blocks of a validated cactus and their attachment to vertices.
#[derive(Debug, Clone)]
pub struct BlockCutTree {
    n: usize,
    blocks: Vec<Block>,
    cut_vertices: Vec<usize>,
    /// For each vertex (0-based), the `(block, position)` pairs it occurs in.
    member_offsets: Vec<usize>,
    members: Vec<(u32, u32)>,
    /// Block vertices (0-based), flattened; block `b` owns
    /// `block_vertices[block_offsets[b]..block_offsets[b + 1]]`.
    block_offsets: Vec<usize>,
    block_vertices: Vec<u32>,
}

impl BlockCutTree {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Vertices lying in two or more blocks, ascending.
    pub fn cut_vertices(&self) -> &[usize] {
        &self.cut_vertices
    }

    /// Indices of the blocks containing vertex `v` (1-based). In the
    /// block-cut tree, a cut vertex is adjacent to exactly these blocks.
    pub fn blocks_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.members_of(v - 1).iter().map(|&(b, _)| b as usize)
    }

    fn members_of(&self, v: usize) -> &[(u32, u32)] {
        &self.members[self.member_offsets[v]..self.member_offsets[v + 1]]
    }
}

/// Decomposes `rep` into edge and cycle blocks, or explains why it is not a
/// cactus.
pub fn validate_cactus(rep: &CactusRep) -> Result<BlockCutTree> {
    let n = rep.n;
    let m = rep.edges.len();

    // Adjacency as (neighbor, edge id), 0-based.
    let mut offsets = vec![0usize; n + 1];
    for &(u, v, _) in &rep.edges {
        offsets[u] += 1;
        offsets[v] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut adj = vec![(0u32, 0u32); 2 * m];
    for (id, &(u, v, _)) in rep.edges.iter().enumerate() {
        for (x, y) in [(u - 1, v - 1), (v - 1, u - 1)] {
            adj[fill[x]] = (y as u32, id as u32);
            fill[x] += 1;
        }
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut next = offsets[..n].to_vec();
    let mut edge_stack: Vec<u32> = Vec::new();
    // (vertex, edge used to enter it)
    let mut dfs: Vec<(usize, usize)> = vec![(0, usize::MAX)];
    disc[0] = 0;
    low[0] = 0;
    let mut timer = 1;
    let mut raw_blocks: Vec<Vec<u32>> = Vec::new();

    while let Some(&(v, via)) = dfs.last() {
        if next[v] < offsets[v + 1] {
            let (u, id) = adj[next[v]];
            next[v] += 1;
            let (u, id) = (u as usize, id as usize);
            if id == via {
                continue;
            }
            if disc[u] == UNSEEN {
                disc[u] = timer;
                low[u] = timer;
                timer += 1;
                edge_stack.push(id as u32);
                dfs.push((u, id));
            } else if disc[u] < disc[v] {
                edge_stack.push(id as u32);
                low[v] = low[v].min(disc[u]);
            }
        } else {
            dfs.pop();
            if let Some(&(p, _)) = dfs.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e as usize == via {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }
    if disc.contains(&UNSEEN) {
        return Err(Error::NotConnected);
    }

    // Scratch for cycle reconstruction: up to two (neighbor, weight) per vertex.
    let mut ring: Vec<[(usize, u64); 2]> = vec![[(UNSEEN, 0); 2]; n];
    let mut ring_deg = vec![0u8; n];
    let mut blocks = Vec::with_capacity(raw_blocks.len());
    for edge_ids in raw_blocks {
        let mut verts: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| {
                let (u, v, _) = rep.edges[e as usize];
                [u - 1, v - 1]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        if edge_ids.len() == 1 {
            let (u, v, weight) = rep.edges[edge_ids[0] as usize];
            blocks.push(Block::Edge { u, v, weight });
            continue;
        }
        if edge_ids.len() != verts.len() {
            return Err(Error::NotCactus {
                vertices: verts.len(),
                edges: edge_ids.len(),
                sample: verts.iter().take(8).map(|&x| x + 1).collect(),
            });
        }
        // A biconnected block with as many edges as vertices is a simple cycle.
        for &e in &edge_ids {
            let (u, v, w) = rep.edges[e as usize];
            for (x, y) in [(u - 1, v - 1), (v - 1, u - 1)] {
                ring[x][ring_deg[x] as usize] = (y, w);
                ring_deg[x] += 1;
            }
        }
        let start = verts[0];
        let mut order = Vec::with_capacity(verts.len());
        let mut prefix = Vec::with_capacity(verts.len());
        let (mut prev, mut cur, mut acc) = (UNSEEN, start, 0u64);
        loop {
            order.push(cur + 1);
            prefix.push(acc);
            let step = if ring[cur][0].0 != prev {
                ring[cur][0]
            } else {
                ring[cur][1]
            };
            acc = acc.checked_add(step.1).ok_or(Error::Overflow)?;
            prev = cur;
            cur = step.0;
            if cur == start {
                break;
            }
        }
        debug_assert_eq!(order.len(), verts.len());
        for &x in &verts {
            ring_deg[x] = 0;
        }
        blocks.push(Block::Cycle {
            vertices: order,
            prefix,
            total: acc,
        });
    }

    let mut count = vec![0usize; n + 1];
    for b in &blocks {
        for v in b.vertices() {
            count[v] += 1;
        }
    }
    let cut_vertices = (1..=n).filter(|&v| count[v] >= 2).collect();
    let mut member_offsets = vec![0usize; n + 1];
    for v in 0..n {
        member_offsets[v + 1] = member_offsets[v] + count[v + 1];
    }
    let mut fill = member_offsets.clone();
    let mut members = vec![(0u32, 0u32); member_offsets[n]];
    let mut block_offsets = Vec::with_capacity(blocks.len() + 1);
    let mut block_vertices = Vec::with_capacity(member_offsets[n]);
    block_offsets.push(0);
    for (b, block) in blocks.iter().enumerate() {
        for (pos, v) in block.vertices().into_iter().enumerate() {
            members[fill[v - 1]] = (b as u32, pos as u32);
            fill[v - 1] += 1;
            block_vertices.push((v - 1) as u32);
        }
        block_offsets.push(block_vertices.len());
    }

    Ok(BlockCutTree {
        n,
        blocks,
        cut_vertices,
        member_offsets,
        members,
        block_offsets,
        block_vertices,
    })
}

impl ShortestPaths for BlockCutTree {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        let s = check_source(source, self.n)?;
        let mut dist: Vec<Option<u64>> = vec![None; self.n];
        dist[s] = Some(0);
        work.layer_count = 1;
        // (vertex, block it was reached through)
        let mut stack: Vec<(usize, u32)> = vec![(s, u32::MAX)];
        while let Some((x, from)) = stack.pop() {
            let dx = dist[x].expect("stacked vertices have distances");
            for &(b, px) in self.members_of(x) {
                work.visit();
                if b == from {
                    continue;
                }
                let b = b as usize;
                let block = &self.blocks[b];
                let entries =
                    &self.block_vertices[self.block_offsets[b]..self.block_offsets[b + 1]];
                for (py, &y) in entries.iter().enumerate() {
                    if py == px as usize {
                        continue;
                    }
                    work.visit();
                    let y = y as usize;
                    debug_assert!(dist[y].is_none(), "each block is entered once");
                    let d = dx
                        .checked_add(block.inner_distance(px as usize, py))
                        .ok_or(Error::Overflow)?;
                    dist[y] = Some(d);
                    stack.push((y, b as u32));
                }
            }
        }
        Ok(DistanceRow::new(source, dist))
    }
}

pub fn cactus_sssp(bct: &BlockCutTree, source: usize) -> Result<DistanceRow> {
    bct.sssp(source)
}

pub fn cactus_wiener(rep: &CactusRep) -> Result<WienerValue> {
    wiener_index(&validate_cactus(rep)?, false).map(|(w, _)| w)
}
