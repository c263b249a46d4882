//! Test-side reference: adjacency re-derived from the geometry of each
//! representation and all-pairs distances by Floyd-Warshall.

#![allow(dead_code)]

use wig_core::{
    ArcRep, CactusRep, DistanceRow, GenParams, GenSpec, GraphClass, InputDocument, IntervalRep,
    PermutationRep, TrapezoidRep,
};

pub type Matrix = Vec<Vec<Option<u64>>>;

pub fn floyd_warshall(n: usize, edges: &[(usize, usize, u64)]) -> Matrix {
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v, w) in edges {
        let (u, v) = (u - 1, v - 1);
        if d[u][v].is_none_or(|x| w < x) {
            d[u][v] = Some(w);
            d[v][u] = Some(w);
        }
    }
    for k in 0..n {
        let through = d[k].clone();
        for row in d.iter_mut() {
            let Some(ik) = row[k] else { continue };
            for (cell, kj) in row.iter_mut().zip(&through) {
                if let Some(kj) = kj {
                    let via = ik + kj;
                    if cell.is_none_or(|x| via < x) {
                        *cell = Some(via);
                    }
                }
            }
        }
    }
    d
}

fn pairs(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if adjacent(i, j) {
                out.push((i, j, 1));
            }
        }
    }
    out
}

pub fn interval_matrix(rep: &IntervalRep) -> Matrix {
    let iv = rep.intervals();
    floyd_warshall(
        iv.len(),
        &pairs(iv.len(), |i, j| {
            let (a, b) = (iv[i - 1], iv[j - 1]);
            a.0.max(b.0) <= a.1.min(b.1)
        }),
    )
}

/// Integer points covered by a closed clockwise arc.
fn arc_points(c: u64, (s, e): (u64, u64)) -> Vec<bool> {
    let mut covered = vec![false; c as usize];
    let mut p = s;
    loop {
        covered[p as usize] = true;
        if p == e {
            break;
        }
        p = (p + 1) % c;
    }
    covered
}

pub fn arc_matrix(rep: &ArcRep) -> Matrix {
    let c = rep.circumference();
    let pts: Vec<Vec<bool>> = rep.arcs().iter().map(|&a| arc_points(c, a)).collect();
    floyd_warshall(
        pts.len(),
        &pairs(pts.len(), |i, j| {
            pts[i - 1].iter().zip(&pts[j - 1]).any(|(x, y)| *x && *y)
        }),
    )
}

pub fn permutation_matrix(rep: &PermutationRep) -> Matrix {
    // Segment for number v joins position pinv(v) on the upper line to v on the lower.
    let pi = rep.pi();
    let n = pi.len();
    let mut pos = vec![0i64; n + 1];
    for (p, &v) in pi.iter().enumerate() {
        pos[v] = p as i64;
    }
    floyd_warshall(
        n,
        &pairs(n, |u, v| (pos[u] - pos[v]) * (u as i64 - v as i64) < 0),
    )
}

pub fn trapezoid_matrix(rep: &TrapezoidRep) -> Matrix {
    let t = rep.traps();
    let left_of = |x: (i64, i64, i64, i64), y: (i64, i64, i64, i64)| x.1 < y.0 && x.3 < y.2;
    floyd_warshall(
        t.len(),
        &pairs(t.len(), |i, j| {
            !left_of(t[i - 1], t[j - 1]) && !left_of(t[j - 1], t[i - 1])
        }),
    )
}

pub fn cactus_matrix(rep: &CactusRep) -> Matrix {
    floyd_warshall(rep.n(), rep.edges())
}

pub fn reference_matrix(doc: &InputDocument) -> Matrix {
    match doc {
        InputDocument::Interval(r) => interval_matrix(r),
        InputDocument::CircularArc(r) => arc_matrix(r),
        InputDocument::Permutation(r) => permutation_matrix(r),
        InputDocument::Trapezoid(r) => trapezoid_matrix(r),
        InputDocument::Cactus(r) => cactus_matrix(r),
    }
}

/// Half the ordered sum, or `None` when some pair is unreachable.
pub fn reference_wiener(m: &Matrix) -> Option<u64> {
    let mut total: u128 = 0;
    for row in m {
        for d in row {
            total += u128::from((*d)?);
        }
    }
    Some((total / 2) as u64)
}

pub fn rows_as_matrix(rows: &[DistanceRow]) -> Matrix {
    rows.iter().map(|r| r.as_slice().to_vec()).collect()
}

/// Seeded generator settings that vary density, connectivity and weights
/// across `k` so a sweep covers sparse, dense and disconnected instances.
pub fn varied_spec(class: GraphClass, n: usize, k: u64) -> GenSpec {
    let mut params = GenParams {
        connected: !k.is_multiple_of(3),
        ..GenParams::default()
    };
    match k % 4 {
        0 => params.coord_max = Some(n as u64),
        1 => params.coord_max = Some(8 * n as u64 + 1),
        2 => params.max_len = 2 + n as u64 / 2,
        _ => {}
    }
    if k.is_multiple_of(5) {
        params.wrap_prob = 0.6;
        params.edge_prob = 0.1;
        params.cycle_len = (3, 12);
        params.weight = (1, 1000);
    }
    GenSpec {
        class,
        n,
        seed: 0x5eed_0000 + k,
        params,
    }
}
