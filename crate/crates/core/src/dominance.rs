//! Layered BFS for two-line intersection models (trapezoids, and permutation
//! segments as degenerate trapezoids).
//!
//! Vertex `j` has top span `[a_j, b_j]` and bottom span `[c_j, d_j]`. Two
//! vertices are non-adjacent exactly when one lies strictly left of the other
//! on both lines. If `S` is connected and `j` misses every member of `S`, then
//! all of `S` lies on the same side of `j`: a path in `S` from a member left of
//! `j` to one right of `j` would contain an edge between a left and a right
//! member, but those are strictly ordered and so not adjacent.
//!
//! The reached set after `k` layers is connected, so an unreached `j` belongs
//! to layer `k + 1` iff
//!
//! ```text
//! (max b over S >= a_j  or  max d over S >= c_j)     // S not all left of j
//! and (min a over S <= b_j  or  min c over S <= d_j) // S not all right of j
//! ```
//!
//! Each of the four disjuncts is monotone as `S` grows, so four pointers over
//! presorted orders flag each vertex at most once per disjunct, and a vertex
//! joins the layer in which its second side gets flagged.

use crate::error::Result;
use crate::graph::{check_source, DistanceRow, WorkCounter};

const NOT_ALL_LEFT: u8 = 1;
const NOT_ALL_RIGHT: u8 = 2;

#[derive(Debug, Clone)]
pub(crate) struct DominanceIndex {
    a: Vec<i64>,
    b: Vec<i64>,
    c: Vec<i64>,
    d: Vec<i64>,
    by_a: Vec<u32>,
    by_b: Vec<u32>,
    by_c: Vec<u32>,
    by_d: Vec<u32>,
}

impl DominanceIndex {
    pub(crate) fn new(corners: impl Iterator<Item = (i64, i64, i64, i64)>) -> Self {
        let (mut a, mut b, mut c, mut d) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (ai, bi, ci, di) in corners {
            a.push(ai);
            b.push(bi);
            c.push(ci);
            d.push(di);
        }
        let order = |key: &[i64]| {
            let mut o: Vec<u32> = (0..key.len() as u32).collect();
            o.sort_by_key(|&k| key[k as usize]);
            o
        };
        let (by_a, by_b, by_c, by_d) = (order(&a), order(&b), order(&c), order(&d));
        Self {
            a,
            b,
            c,
            d,
            by_a,
            by_b,
            by_c,
            by_d,
        }
    }

    /// For callers whose sort orders are already known (permutations).
    pub(crate) fn with_orders(
        corners: (Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>),
        orders: (Vec<u32>, Vec<u32>, Vec<u32>, Vec<u32>),
    ) -> Self {
        let (a, b, c, d) = corners;
        let (by_a, by_b, by_c, by_d) = orders;
        debug_assert!(by_a
            .windows(2)
            .all(|w| a[w[0] as usize] <= a[w[1] as usize]));
        debug_assert!(by_b
            .windows(2)
            .all(|w| b[w[0] as usize] <= b[w[1] as usize]));
        debug_assert!(by_c
            .windows(2)
            .all(|w| c[w[0] as usize] <= c[w[1] as usize]));
        debug_assert!(by_d
            .windows(2)
            .all(|w| d[w[0] as usize] <= d[w[1] as usize]));
        Self {
            a,
            b,
            c,
            d,
            by_a,
            by_b,
            by_c,
            by_d,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.a.len()
    }

    pub(crate) fn sssp(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        let n = self.len();
        let s = check_source(source, n)?;
        let mut dist: Vec<Option<u64>> = vec![None; n];
        let mut flags = vec![0u8; n];
        dist[s] = Some(0);

        let (mut max_b, mut max_d) = (self.b[s], self.d[s]);
        let (mut min_a, mut min_c) = (self.a[s], self.c[s]);
        // Ascending pointers into by_a / by_c, descending into by_b / by_d.
        let (mut pa, mut pc) = (0usize, 0usize);
        let (mut pb, mut pd) = (n, n);
        let mut layer = 0u64;
        let mut fresh: Vec<usize> = Vec::new();
        work.layer_count = 1;

        loop {
            while pa < n && self.a[self.by_a[pa] as usize] <= max_b {
                work.visit();
                let j = self.by_a[pa] as usize;
                if mark(&mut flags[j], NOT_ALL_LEFT) && dist[j].is_none() {
                    dist[j] = Some(layer + 1);
                    fresh.push(j);
                }
                pa += 1;
            }
            while pc < n && self.c[self.by_c[pc] as usize] <= max_d {
                work.visit();
                let j = self.by_c[pc] as usize;
                if mark(&mut flags[j], NOT_ALL_LEFT) && dist[j].is_none() {
                    dist[j] = Some(layer + 1);
                    fresh.push(j);
                }
                pc += 1;
            }
            while pb > 0 && self.b[self.by_b[pb - 1] as usize] >= min_a {
                work.visit();
                let j = self.by_b[pb - 1] as usize;
                if mark(&mut flags[j], NOT_ALL_RIGHT) && dist[j].is_none() {
                    dist[j] = Some(layer + 1);
                    fresh.push(j);
                }
                pb -= 1;
            }
            while pd > 0 && self.d[self.by_d[pd - 1] as usize] >= min_c {
                work.visit();
                let j = self.by_d[pd - 1] as usize;
                if mark(&mut flags[j], NOT_ALL_RIGHT) && dist[j].is_none() {
                    dist[j] = Some(layer + 1);
                    fresh.push(j);
                }
                pd -= 1;
            }
            if fresh.is_empty() {
                break;
            }
            for j in fresh.drain(..) {
                max_b = max_b.max(self.b[j]);
                max_d = max_d.max(self.d[j]);
                min_a = min_a.min(self.a[j]);
                min_c = min_c.min(self.c[j]);
            }
            layer += 1;
            work.layer_count += 1;
        }
        Ok(DistanceRow::new(source, dist))
    }
}

/// Sets `bit`; true once both sides are flagged.
#[inline]
fn mark(flags: &mut u8, bit: u8) -> bool {
    *flags |= bit;
    *flags == NOT_ALL_LEFT | NOT_ALL_RIGHT
}
