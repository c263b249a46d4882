//! Trapezoid graphs, plus the degenerate embeddings of interval and
//! permutation representations into trapezoids.

use crate::dominance::DominanceIndex;
use crate::error::{Error, Result};
use crate::graph::{check_source, DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter};
use crate::interval::IntervalRep;
use crate::permutation::PermutationRep;
use crate::wiener::{wiener_index, WienerValue};

/// Corners `(a, b, c, d)`: `[a, b]` on the top line, `[c, d]` on the bottom.
pub type Trapezoid = (i64, i64, i64, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrapezoidRep {
    traps: Vec<Trapezoid>,
}

impl TrapezoidRep {
    /// Requires `a <= b` and `c <= d` for every record. Equal corners are
    /// allowed so that intervals and segments embed.
    pub fn new(traps: Vec<Trapezoid>) -> Result<Self> {
        if let Some(k) = traps.iter().position(|&(a, b, c, d)| a > b || c > d) {
            return Err(Error::invalid(format!(
                "trapezoid {} violates a <= b, c <= d: {:?}",
                k + 1,
                traps[k]
            )));
        }
        Ok(Self { traps })
    }

    pub fn len(&self) -> usize {
        self.traps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traps.is_empty()
    }

    pub fn traps(&self) -> &[Trapezoid] {
        &self.traps
    }
}

#[inline]
fn strictly_left(x: Trapezoid, y: Trapezoid) -> bool {
    x.1 < y.0 && x.3 < y.2
}

#[inline]
fn intersects(x: Trapezoid, y: Trapezoid) -> bool {
    !strictly_left(x, y) && !strictly_left(y, x)
}

/// True unless one trapezoid lies strictly left of the other on both lines.
pub fn trap_edge(rep: &TrapezoidRep, i: usize, j: usize) -> Result<bool> {
    let n = rep.len();
    let ti = rep.traps[check_source(i, n)?];
    let tj = rep.traps[check_source(j, n)?];
    Ok(intersects(ti, tj))
}

/// Every edge materialized. Oracle use only.
pub fn build_explicit(rep: &TrapezoidRep) -> ExplicitGraph {
    let t = &rep.traps;
    ExplicitGraph::from_predicate(rep.len(), |i, j| intersects(t[i - 1], t[j - 1]))
}

/// `[l, r]` becomes `(l, r, l, r)`.
pub fn from_interval(rep: &IntervalRep) -> TrapezoidRep {
    TrapezoidRep {
        traps: rep.intervals().iter().map(|&(l, r)| (l, r, l, r)).collect(),
    }
}

/// Number `i` becomes the segment `(i, i, pinv[i], pinv[i])`.
pub fn from_permutation(rep: &PermutationRep) -> TrapezoidRep {
    TrapezoidRep {
        traps: (1..=rep.len())
            .map(|i| {
                let (u, p) = (i as i64, rep.pinv(i) as i64);
                (u, u, p, p)
            })
            .collect(),
    }
}

#[derive(Debug, Clone)]
pub struct TrapezoidGraph {
    rep: TrapezoidRep,
    index: DominanceIndex,
}

impl TrapezoidGraph {
    pub fn new(rep: TrapezoidRep) -> Self {
        let index = DominanceIndex::new(rep.traps.iter().copied());
        Self { rep, index }
    }

    pub fn rep(&self) -> &TrapezoidRep {
        &self.rep
    }
}

impl ShortestPaths for TrapezoidGraph {
    fn vertex_count(&self) -> usize {
        self.rep.len()
    }

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        self.index.sssp(source, work)
    }
}

pub fn trap_sssp(rep: &TrapezoidRep, source: usize) -> Result<DistanceRow> {
    TrapezoidGraph::new(rep.clone()).sssp(source)
}

pub fn trap_wiener(rep: &TrapezoidRep) -> Result<WienerValue> {
    wiener_index(&TrapezoidGraph::new(rep.clone()), false).map(|(w, _)| w)
}
