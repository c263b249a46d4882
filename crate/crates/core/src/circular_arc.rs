//! Circular-arc graphs on a discretized circle of circumference `C`.
//!
//! Arc `(s, e)` covers the closed clockwise stretch from `s` to `e`, wrapping
//! through `0` when `e < s`. Two arcs meet iff one contains the other's start.
//!
//! Distances from a source grow a reached arc `R_k` (union of all arcs within
//! distance `k`, contiguous because the family is connected). Positions are
//! measured clockwise from the source's start, and `R_k` is kept unwrapped as
//! `[-back, fwd]`. Layer 1 is found by one full scan. After that, every
//! unreached arc meeting `R_k` has its start or its end inside `R_k`: an arc
//! containing neither would contain all of `R_k`, hence the source, and would
//! already be in layer 1. So four pointers (starts and ends, each walked
//! clockwise from `fwd` and counterclockwise from `-back`) only ever look at
//! newly covered stretches. Once `R_k` is the whole circle every remaining arc
//! joins the next layer.

use crate::error::{Error, Result};
use crate::graph::{check_source, DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter};
use crate::interval::IntervalRep;
use crate::wiener::{wiener_index, WienerValue};

/// Largest accepted circumference; keeps unwrapped coordinates inside `i64`.
pub const MAX_CIRCUMFERENCE: u64 = 1 << 61;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcRep {
    circumference: u64,
    arcs: Vec<(u64, u64)>,
}

impl ArcRep {
    pub fn new(circumference: u64, arcs: Vec<(u64, u64)>) -> Result<Self> {
        if circumference == 0 || circumference > MAX_CIRCUMFERENCE {
            return Err(Error::invalid(format!(
                "circumference {circumference} outside 1..={MAX_CIRCUMFERENCE}"
            )));
        }
        for (k, &(s, e)) in arcs.iter().enumerate() {
            if s >= circumference || e >= circumference {
                return Err(Error::invalid(format!(
                    "arc {} = ({s}, {e}) has a position outside [0, {circumference})",
                    k + 1
                )));
            }
            if s == e {
                return Err(Error::invalid(format!(
                    "arc {} has equal start and end {s}",
                    k + 1
                )));
            }
        }
        Ok(Self {
            circumference,
            arcs,
        })
    }

    pub fn circumference(&self) -> u64 {
        self.circumference
    }

    pub fn arcs(&self) -> &[(u64, u64)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Clockwise length of arc `k` (0-based), in `1..C`.
    fn arc_len(&self, k: usize) -> u64 {
        let (s, e) = self.arcs[k];
        (e + self.circumference - s) % self.circumference
    }

    /// Every position shifted clockwise by `shift`.
    pub fn rotated(&self, shift: u64) -> Self {
        let c = self.circumference;
        let r = |x: u64| ((x as u128 + shift as u128) % c as u128) as u64;
        Self {
            circumference: c,
            arcs: self.arcs.iter().map(|&(s, e)| (r(s), r(e))).collect(),
        }
    }
}

/// Splits an arc into at most two closed linear pieces of `[0, C)`.
fn pieces(c: u64, (s, e): (u64, u64)) -> [Option<(u64, u64)>; 2] {
    if s < e {
        [Some((s, e)), None]
    } else {
        [Some((s, c - 1)), Some((0, e))]
    }
}

fn arcs_meet(c: u64, x: (u64, u64), y: (u64, u64)) -> bool {
    pieces(c, x).into_iter().flatten().any(|(l1, r1)| {
        pieces(c, y)
            .into_iter()
            .flatten()
            .any(|(l2, r2)| l2 <= r1 && l1 <= r2)
    })
}

/// Closed-arc intersection, by cases on whether each arc wraps.
pub fn arc_edge(rep: &ArcRep, i: usize, j: usize) -> Result<bool> {
    let n = rep.len();
    let x = rep.arcs[check_source(i, n)?];
    let y = rep.arcs[check_source(j, n)?];
    Ok(arcs_meet(rep.circumference, x, y))
}

/// Every edge materialized. Oracle use only.
pub fn build_explicit(rep: &ArcRep) -> ExplicitGraph {
    let c = rep.circumference;
    ExplicitGraph::from_predicate(rep.len(), |i, j| {
        arcs_meet(c, rep.arcs[i - 1], rep.arcs[j - 1])
    })
}

/// Places intervals on a circle large enough that nothing wraps. Interval
/// `[l, r]` becomes the arc `(2(l - m), 2(r - m) + 1)` where `m` is the
/// smallest left endpoint; doubling keeps single-point intervals
/// representable without changing which pairs meet.
pub fn from_interval(rep: &IntervalRep) -> Result<ArcRep> {
    let iv = rep.intervals();
    let Some(min_l) = iv.iter().map(|&(l, _)| l).min() else {
        return ArcRep::new(1, Vec::new());
    };
    let max_r = iv.iter().map(|&(_, r)| r).max().unwrap_or(min_l);
    let span = (max_r as i128 - min_l as i128) as u128;
    let c = 2 * span + 3;
    if c > MAX_CIRCUMFERENCE as u128 {
        return Err(Error::invalid("interval span too large for a circle"));
    }
    let pos = |x: i64| (2 * (x as i128 - min_l as i128)) as u64;
    ArcRep::new(
        c as u64,
        iv.iter().map(|&(l, r)| (pos(l), pos(r) + 1)).collect(),
    )
}

#[derive(Debug, Clone)]
pub struct ArcGraph {
    rep: ArcRep,
    /// Arc ids by start position.
    by_start: Vec<u32>,
    /// Arc ids by end position.
    by_end: Vec<u32>,
}

impl ArcGraph {
    pub fn new(rep: ArcRep) -> Self {
        let mut by_start: Vec<u32> = (0..rep.len() as u32).collect();
        by_start.sort_by_key(|&k| rep.arcs[k as usize].0);
        let mut by_end = by_start.clone();
        by_end.sort_by_key(|&k| rep.arcs[k as usize].1);
        Self {
            rep,
            by_start,
            by_end,
        }
    }

    pub fn rep(&self) -> &ArcRep {
        &self.rep
    }
}

/// One sorted position list seen clockwise from the source start.
struct Ring<'a> {
    order: &'a [u32],
    /// Index in `order` of the first entry at or after the origin.
    first: usize,
    /// Next unvisited entry going clockwise / counterclockwise, as a count
    /// of steps taken from either end.
    cw: usize,
    ccw: usize,
}

impl<'a> Ring<'a> {
    fn new(order: &'a [u32], pos: impl Fn(u32) -> u64, origin: u64) -> Self {
        let first = order.partition_point(|&k| pos(k) < origin);
        Ring {
            order,
            first,
            cw: 0,
            ccw: 0,
        }
    }

    fn remaining(&self) -> bool {
        self.cw + self.ccw < self.order.len()
    }

    fn peek_cw(&self) -> u32 {
        self.order[(self.first + self.cw) % self.order.len()]
    }

    fn peek_ccw(&self) -> u32 {
        let n = self.order.len();
        self.order[(self.first + n - 1 - self.ccw) % n]
    }
}

impl ShortestPaths for ArcGraph {
    fn vertex_count(&self) -> usize {
        self.rep.len()
    }

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        let n = self.rep.len();
        let s = check_source(source, n)?;
        let c = self.rep.circumference;
        let arcs = &self.rep.arcs;
        let origin = arcs[s].0;
        let off = |x: u64| ((x + c - origin) % c) as i64;
        let ci = c as i64;

        let mut dist: Vec<Option<u64>> = vec![None; n];
        dist[s] = Some(0);
        work.layer_count = 1;

        // R_0 = [0, len(source)] in offsets.
        let (mut back, mut fwd) = (0i64, self.rep.arc_len(s) as i64);
        let mut fresh: Vec<usize> = Vec::new();
        for j in 0..n {
            work.visit();
            if j == s {
                continue;
            }
            let o = off(arcs[j].0);
            let len = self.rep.arc_len(j) as i64;
            if o <= fwd || o + len >= ci {
                dist[j] = Some(1);
                fresh.push(j);
            }
        }

        // Entries already inside R_0 belong to layer-1 arcs; the sweeps pass
        // over them without assigning anything.
        let mut starts = Ring::new(&self.by_start, |k| arcs[k as usize].0, origin);
        let mut ends = Ring::new(&self.by_end, |k| arcs[k as usize].1, origin);

        let mut layer = 1u64;
        while !fresh.is_empty() {
            work.layer_count += 1;
            for j in fresh.drain(..) {
                let o = off(arcs[j].0);
                let len = self.rep.arc_len(j) as i64;
                // The two unwrapped placements of arc j; keep those meeting R.
                for lo in [o, o - ci] {
                    let hi = lo + len;
                    if lo <= fwd && hi >= -back {
                        back = back.max(-lo);
                        fwd = fwd.max(hi);
                    }
                }
            }
            if fwd + back >= ci - 1 {
                let mut any = false;
                for d in dist.iter_mut() {
                    work.visit();
                    if d.is_none() {
                        *d = Some(layer + 1);
                        any = true;
                    }
                }
                if any {
                    work.layer_count += 1;
                }
                break;
            }

            for (ring, is_starts) in [(&mut starts, true), (&mut ends, false)] {
                let pos = |k: u32| {
                    let (a, b) = arcs[k as usize];
                    off(if is_starts { a } else { b })
                };
                while ring.remaining() && pos(ring.peek_cw()) <= fwd {
                    work.visit();
                    let j = ring.peek_cw() as usize;
                    ring.cw += 1;
                    if dist[j].is_none() {
                        dist[j] = Some(layer + 1);
                        fresh.push(j);
                    }
                }
                while ring.remaining() && pos(ring.peek_ccw()) >= ci - back {
                    work.visit();
                    let j = ring.peek_ccw() as usize;
                    ring.ccw += 1;
                    if dist[j].is_none() {
                        dist[j] = Some(layer + 1);
                        fresh.push(j);
                    }
                }
            }
            layer += 1;
        }
        Ok(DistanceRow::new(source, dist))
    }
}

pub fn circ_sssp(rep: &ArcRep, source: usize) -> Result<DistanceRow> {
    ArcGraph::new(rep.clone()).sssp(source)
}

pub fn circ_wiener(rep: &ArcRep) -> Result<WienerValue> {
    wiener_index(&ArcGraph::new(rep.clone()), false).map(|(w, _)| w)
}
