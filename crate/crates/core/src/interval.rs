//! Interval graphs.
//!
//! Single-source distances are computed on the representation alone. The
//! union of all intervals within distance `k` of the source is one closed
//! interval `[lo, hi]` (it is the union of a connected family), and the
//! unreached intervals meeting it are exactly layer `k + 1`. Two pointers,
//! one over the intervals by ascending left endpoint and one by descending
//! right endpoint, discover each vertex once, so a source costs `O(n)` after
//! a single `O(n log n)` sort shared by every source.

use crate::error::{Error, Result};
use crate::graph::{check_source, DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter};
use crate::wiener::{wiener_index, WienerValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRep {
    intervals: Vec<(i64, i64)>,
}

impl IntervalRep {
    /// Closed intervals `[l, r]` with `l <= r`. Vertex `k` is `intervals[k - 1]`.
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self> {
        if let Some(k) = intervals.iter().position(|&(l, r)| l > r) {
            let (l, r) = intervals[k];
            return Err(Error::invalid(format!(
                "interval {} has left endpoint {l} > right endpoint {r}",
                k + 1
            )));
        }
        Ok(Self { intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    /// Interval of vertex `v` (1-based).
    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v - 1]
    }
}

/// Closed-interval intersection; touching endpoints count.
pub fn interval_edge(rep: &IntervalRep, i: usize, j: usize) -> Result<bool> {
    let n = rep.len();
    let (li, ri) = rep.intervals[check_source(i, n)?];
    let (lj, rj) = rep.intervals[check_source(j, n)?];
    Ok(lj <= ri && li <= rj)
}

/// Materializes every edge with the pairwise predicate. Oracle use only.
pub fn build_explicit(rep: &IntervalRep) -> ExplicitGraph {
    let iv = &rep.intervals;
    ExplicitGraph::from_predicate(rep.len(), |i, j| {
        let ((li, ri), (lj, rj)) = (iv[i - 1], iv[j - 1]);
        lj <= ri && li <= rj
    })
}

/// An interval representation with its sorted sweep orders.
#[derive(Debug, Clone)]
pub struct IntervalGraph {
    rep: IntervalRep,
    by_left: Vec<u32>,
    by_right_desc: Vec<u32>,
}

impl IntervalGraph {
    pub fn new(rep: IntervalRep) -> Self {
        let iv = &rep.intervals;
        let mut by_left: Vec<u32> = (0..iv.len() as u32).collect();
        by_left.sort_by_key(|&k| iv[k as usize].0);
        let mut by_right_desc = by_left.clone();
        by_right_desc.sort_by_key(|&k| std::cmp::Reverse(iv[k as usize].1));
        Self {
            rep,
            by_left,
            by_right_desc,
        }
    }

    pub fn rep(&self) -> &IntervalRep {
        &self.rep
    }
}

impl ShortestPaths for IntervalGraph {
    fn vertex_count(&self) -> usize {
        self.rep.len()
    }

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        let n = self.rep.len();
        let s = check_source(source, n)?;
        let iv = &self.rep.intervals;
        let mut dist: Vec<Option<u64>> = vec![None; n];
        dist[s] = Some(0);

        let (mut lo, mut hi) = iv[s];
        let (mut pl, mut pr) = (0usize, 0usize);
        let mut layer = 0u64;
        let mut fresh: Vec<usize> = Vec::new();
        work.layer_count = 1;
        loop {
            // Everything with l <= hi has been passed by `pl`; everything
            // with r >= lo by `pr`. A vertex meets [lo, hi] once both hold.
            while pl < n && iv[self.by_left[pl] as usize].0 <= hi {
                let j = self.by_left[pl] as usize;
                work.visit();
                if dist[j].is_none() && iv[j].1 >= lo {
                    dist[j] = Some(layer + 1);
                    fresh.push(j);
                }
                pl += 1;
            }
            while pr < n && iv[self.by_right_desc[pr] as usize].1 >= lo {
                let j = self.by_right_desc[pr] as usize;
                work.visit();
                if dist[j].is_none() && iv[j].0 <= hi {
                    dist[j] = Some(layer + 1);
                    fresh.push(j);
                }
                pr += 1;
            }
            if fresh.is_empty() {
                break;
            }
            let (old_lo, old_hi) = (lo, hi);
            for j in fresh.drain(..) {
                lo = lo.min(iv[j].0);
                hi = hi.max(iv[j].1);
            }
            debug_assert!(lo <= old_lo && hi >= old_hi, "reached span must only grow");
            layer += 1;
            work.layer_count += 1;
        }
        Ok(DistanceRow::new(source, dist))
    }
}

pub fn interval_sssp(rep: &IntervalRep, source: usize) -> Result<DistanceRow> {
    IntervalGraph::new(rep.clone()).sssp(source)
}

pub fn interval_wiener(rep: &IntervalRep) -> Result<WienerValue> {
    wiener_index(&IntervalGraph::new(rep.clone()), false).map(|(w, _)| w)
}
