//! Exact Wiener index accumulation.
//!
//! The index is half the sum of `d(u, v)` over ordered pairs, which is the
//! sum over unordered pairs. Rows are summed into a `u128` and the halved
//! result must fit in a `u64`, otherwise [`Error::Overflow`] is returned.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter, WorkSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WienerValue(u64);

impl WienerValue {
    pub fn get(self) -> u64 {
        self.0
    }

    /// Halves an ordered-pair sum. Fails when the result does not fit.
    pub fn from_ordered_sum(sum: u128) -> Result<Self> {
        debug_assert!(sum.is_multiple_of(2), "ordered distance sum must be even");
        u64::try_from(sum / 2)
            .map(WienerValue)
            .map_err(|_| Error::Overflow)
    }
}

impl fmt::Display for WienerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Sum of one row; `DisconnectedGraph` on any unreachable entry.
fn row_sum(row: &DistanceRow) -> Result<u128> {
    row.as_slice().iter().try_fold(0u128, |acc, d| match d {
        Some(d) => Ok(acc + u128::from(*d)),
        None => Err(Error::DisconnectedGraph),
    })
}

/// Wiener index from a full set of distance rows, one per source `1..=n`.
pub fn wiener_from_rows(rows: &[DistanceRow]) -> Result<WienerValue> {
    let n = rows.len();
    let mut seen = vec![false; n];
    for row in rows {
        let s = row.source();
        if s == 0 || s > n || seen[s - 1] || row.len() != n {
            return Err(Error::IncompleteRows { n });
        }
        seen[s - 1] = true;
    }
    let mut total = 0u128;
    for row in rows {
        total = total.checked_add(row_sum(row)?).ok_or(Error::Overflow)?;
    }
    WienerValue::from_ordered_sum(total)
}

/// Wiener index of an explicit graph by one BFS (or Dijkstra when weighted)
/// per source.
pub fn oracle_wiener(g: &ExplicitGraph) -> Result<WienerValue> {
    wiener_index(g, false).map(|(w, _)| w)
}

/// Runs every source through `g` and folds the rows into the Wiener index
/// without retaining them. With `parallel`, sources are spread over the rayon
/// pool; the integer reduction makes the result order-independent.
pub fn wiener_index<G>(g: &G, parallel: bool) -> Result<(WienerValue, WorkSummary)>
where
    G: ShortestPaths + ?Sized,
{
    let n = g.vertex_count();
    let one = |s: usize| -> Result<(u128, WorkSummary)> {
        let mut work = WorkCounter::default();
        let row = g.sssp_counted(s, &mut work)?;
        let mut summary = WorkSummary::default();
        summary.record(&work);
        Ok((row_sum(&row)?, summary))
    };
    let fold = |a: (u128, WorkSummary), b: (u128, WorkSummary)| -> Result<(u128, WorkSummary)> {
        Ok((a.0.checked_add(b.0).ok_or(Error::Overflow)?, a.1.merge(b.1)))
    };
    let (total, summary) = if parallel {
        (1..=n)
            .into_par_iter()
            .map(one)
            .try_reduce(|| (0, WorkSummary::default()), fold)?
    } else {
        let mut acc = (0u128, WorkSummary::default());
        for s in 1..=n {
            acc = fold(acc, one(s)?)?;
        }
        acc
    };
    Ok((WienerValue::from_ordered_sum(total)?, summary))
}

/// All rows, in source order.
pub fn distance_matrix<G>(g: &G, parallel: bool) -> Result<(Vec<DistanceRow>, WorkSummary)>
where
    G: ShortestPaths + ?Sized,
{
    let n = g.vertex_count();
    let one = |s: usize| -> Result<(DistanceRow, WorkCounter)> {
        let mut work = WorkCounter::default();
        let row = g.sssp_counted(s, &mut work)?;
        Ok((row, work))
    };
    let runs: Vec<_> = if parallel {
        (1..=n).into_par_iter().map(one).collect::<Result<_>>()?
    } else {
        (1..=n).map(one).collect::<Result<_>>()?
    };
    let mut summary = WorkSummary::default();
    let rows = runs
        .into_iter()
        .map(|(row, work)| {
            summary.record(&work);
            row
        })
        .collect();
    Ok((rows, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bfs_sssp;

    fn rows(g: &ExplicitGraph) -> Vec<DistanceRow> {
        (1..=g.n()).map(|s| bfs_sssp(g, s).unwrap()).collect()
    }

    fn cycle(n: usize) -> ExplicitGraph {
        ExplicitGraph::unweighted(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    #[test]
    fn small_graphs() {
        let p3 = ExplicitGraph::unweighted(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(wiener_from_rows(&rows(&p3)).unwrap().get(), 4);
        let k2 = ExplicitGraph::unweighted(2, [(1, 2)]).unwrap();
        assert_eq!(wiener_from_rows(&rows(&k2)).unwrap().get(), 1);
        assert_eq!(wiener_from_rows(&rows(&cycle(4))).unwrap().get(), 8);
    }

    #[test]
    fn oracle_closed_forms() {
        let p5 = ExplicitGraph::unweighted(5, (1..5).map(|i| (i, i + 1))).unwrap();
        assert_eq!(oracle_wiener(&p5).unwrap().get(), 20);
        let k4 = ExplicitGraph::from_predicate(4, |_, _| true);
        assert_eq!(oracle_wiener(&k4).unwrap().get(), 6);
        assert_eq!(oracle_wiener(&cycle(6)).unwrap().get(), 27);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = ExplicitGraph::unweighted(3, [(1, 2)]).unwrap();
        assert_eq!(wiener_from_rows(&rows(&g)), Err(Error::DisconnectedGraph));
        assert_eq!(oracle_wiener(&g), Err(Error::DisconnectedGraph));
    }

    #[test]
    fn empty_and_single() {
        let g = ExplicitGraph::unweighted(0, []).unwrap();
        assert_eq!(oracle_wiener(&g).unwrap().get(), 0);
        let g = ExplicitGraph::unweighted(1, []).unwrap();
        assert_eq!(oracle_wiener(&g).unwrap().get(), 0);
    }

    #[test]
    fn incomplete_rows_rejected() {
        let g = cycle(4);
        let mut r = rows(&g);
        r.pop();
        assert_eq!(wiener_from_rows(&r), Err(Error::IncompleteRows { n: 3 }));
        let mut r = rows(&g);
        r[1] = r[0].clone();
        assert_eq!(wiener_from_rows(&r), Err(Error::IncompleteRows { n: 4 }));
    }

    #[test]
    fn overflow_detected() {
        let huge = u64::MAX / 2 + 1;
        let g = ExplicitGraph::weighted(3, [(1, 2, huge), (2, 3, huge)]).unwrap();
        assert_eq!(oracle_wiener(&g), Err(Error::Overflow));
        assert_eq!(
            WienerValue::from_ordered_sum(2 * u128::from(u64::MAX) + 2),
            Err(Error::Overflow)
        );
        assert_eq!(
            WienerValue::from_ordered_sum(2 * u128::from(u64::MAX))
                .unwrap()
                .get(),
            u64::MAX
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = cycle(31);
        let (a, sa) = wiener_index(&g, false).unwrap();
        let (b, sb) = wiener_index(&g, true).unwrap();
        assert_eq!(a, b);
        assert_eq!(sa, sb);
    }
}
