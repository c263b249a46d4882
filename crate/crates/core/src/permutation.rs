//! Permutation graphs.
//!
//! Number `i` is joined by a segment from position `i` on the upper line to
//! position `pinv[i]` on the lower line; `i` and `j` are adjacent when their
//! segments cross. A segment is a trapezoid with `a = b = i` and
//! `c = d = pinv[i]`, so distances come from the shared dominance sweep. The
//! four sort orders are the identity and `pi` itself, so no sorting is needed.

use crate::dominance::DominanceIndex;
use crate::error::{Error, Result};
use crate::graph::{check_source, DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter};
use crate::wiener::{wiener_index, WienerValue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationRep {
    /// `pi[p - 1]` is the number at lower-line position `p`.
    pi: Vec<usize>,
    /// `pinv[i - 1]` is the lower-line position of number `i`.
    pinv: Vec<usize>,
}

impl PermutationRep {
    /// `pi` must be a permutation of `1..=n`.
    pub fn new(pi: Vec<usize>) -> Result<Self> {
        let n = pi.len();
        let mut pinv = vec![0usize; n];
        for (p, &x) in pi.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::invalid(format!(
                    "value {x} at position {} is outside 1..={n}",
                    p + 1
                )));
            }
            if pinv[x - 1] != 0 {
                return Err(Error::invalid(format!("value {x} appears twice")));
            }
            pinv[x - 1] = p + 1;
        }
        Ok(Self { pi, pinv })
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    /// Lower-line position of number `i` (1-based).
    pub fn pinv(&self, i: usize) -> usize {
        self.pinv[i - 1]
    }

    pub fn identity(n: usize) -> Self {
        Self::new((1..=n).collect()).expect("identity is a permutation")
    }

    pub fn reverse(n: usize) -> Self {
        Self::new((1..=n).rev().collect()).expect("reversal is a permutation")
    }

    /// `pi` composed with the full reversal of the lower line.
    pub fn reversed(&self) -> Self {
        Self::new(self.pi.iter().rev().copied().collect()).expect("reversal of a permutation")
    }
}

/// True iff `(i - j)(pinv[i] - pinv[j]) < 0`.
pub fn perm_edge(rep: &PermutationRep, i: usize, j: usize) -> Result<bool> {
    let n = rep.len();
    check_source(i, n)?;
    check_source(j, n)?;
    Ok(crosses(i, rep.pinv(i), j, rep.pinv(j)))
}

#[inline]
fn crosses(i: usize, pi: usize, j: usize, pj: usize) -> bool {
    (i < j) != (pi < pj)
}

/// The crossing graph with every edge materialized. Oracle use only.
pub fn build_explicit(rep: &PermutationRep) -> ExplicitGraph {
    ExplicitGraph::from_predicate(rep.len(), |i, j| crosses(i, rep.pinv(i), j, rep.pinv(j)))
}

#[derive(Debug, Clone)]
pub struct PermutationGraph {
    rep: PermutationRep,
    index: DominanceIndex,
}

impl PermutationGraph {
    pub fn new(rep: PermutationRep) -> Self {
        let n = rep.len();
        let upper: Vec<i64> = (1..=n as i64).collect();
        let lower: Vec<i64> = rep.pinv.iter().map(|&p| p as i64).collect();
        let by_upper: Vec<u32> = (0..n as u32).collect();
        let by_lower: Vec<u32> = rep.pi.iter().map(|&x| (x - 1) as u32).collect();
        let index = DominanceIndex::with_orders(
            (upper.clone(), upper, lower.clone(), lower),
            (by_upper.clone(), by_upper, by_lower.clone(), by_lower),
        );
        Self { rep, index }
    }

    pub fn rep(&self) -> &PermutationRep {
        &self.rep
    }
}

impl ShortestPaths for PermutationGraph {
    fn vertex_count(&self) -> usize {
        self.rep.len()
    }

    fn sssp_counted(&self, source: usize, work: &mut WorkCounter) -> Result<DistanceRow> {
        self.index.sssp(source, work)
    }
}

pub fn perm_sssp(rep: &PermutationRep, source: usize) -> Result<DistanceRow> {
    PermutationGraph::new(rep.clone()).sssp(source)
}

pub fn perm_wiener(rep: &PermutationRep) -> Result<WienerValue> {
    wiener_index(&PermutationGraph::new(rep.clone()), false).map(|(w, _)| w)
}
