//! Seeded random instances for every graph class.
//!
//! All randomness comes from PCG64 (the 128-bit-state XSL-RR 128/64
//! generator of the `rand_pcg` crate) seeded with
//! `Pcg64::seed_from_u64(seed)`, so a [`GenSpec`] always produces the same
//! document.
//!
//! When `connected` is set, interval, circular-arc, trapezoid and permutation
//! instances are repaired rather than re-drawn: each gap between consecutive
//! components is closed by stretching one record (permutations swap two
//! adjacent entries instead), and the number of repairs is reported in
//! [`Generated::augmented`]. Cactus instances are
//! connected by construction.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg64;

use crate::cactus::CactusRep;
use crate::circular_arc::{ArcRep, MAX_CIRCUMFERENCE};
use crate::document::{GraphClass, InputDocument};
use crate::error::{Error, Result};
use crate::interval::IntervalRep;
use crate::permutation::PermutationRep;
use crate::trapezoid::TrapezoidRep;

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Coordinates are drawn from `[0, coord_max]`; for arcs, the circumference
    /// is `coord_max + 1`. Defaults to `4n`.
    pub coord_max: Option<u64>,
    /// Interval, trapezoid-side and arc lengths are drawn from
    /// `[0, max_len]` (`[1, max_len]` for arcs). Defaults to 8.
    pub max_len: u64,
    /// Probability that an arc is placed across position 0.
    pub wrap_prob: f64,
    /// Cactus: probability that a new block is a single edge.
    pub edge_prob: f64,
    /// Cactus: inclusive range of cycle lengths.
    pub cycle_len: (usize, usize),
    /// Cactus: inclusive range of edge weights.
    pub weight: (u64, u64),
    pub connected: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            coord_max: None,
            max_len: 8,
            wrap_prob: 0.1,
            edge_prob: 0.5,
            cycle_len: (3, 8),
            weight: (1, 9),
            connected: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
    pub params: GenParams,
}

impl GenSpec {
    pub fn new(class: GraphClass, n: usize, seed: u64) -> Self {
        Self {
            class,
            n,
            seed,
            params: GenParams::default(),
        }
    }

    pub fn connected(mut self) -> Self {
        self.params.connected = true;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub document: InputDocument,
    /// Records stretched to make the instance connected.
    pub augmented: usize,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::GenerationFailed(msg.into())
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let p = &spec.params;
    let n = spec.n;
    if n == 0 {
        return Err(fail("n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p.wrap_prob) || !(0.0..=1.0).contains(&p.edge_prob) {
        return Err(fail("probabilities must lie in [0, 1]"));
    }
    let coord_max = p.coord_max.unwrap_or(4 * n as u64);
    if coord_max > i64::MAX as u64 / 4 {
        return Err(fail("coordinate range too large"));
    }
    let mut rng = Pcg64::seed_from_u64(spec.seed);

    let (document, augmented) = match spec.class {
        GraphClass::Interval => {
            let mut iv: Vec<(i64, i64)> = (0..n)
                .map(|_| {
                    let l = rng.random_range(0..=coord_max) as i64;
                    (l, l + rng.random_range(0..=p.max_len) as i64)
                })
                .collect();
            let aug = if p.connected {
                connect_intervals(&mut iv)
            } else {
                0
            };
            (InputDocument::Interval(IntervalRep::new(iv)?), aug)
        }
        GraphClass::Trapezoid => {
            let mut traps: Vec<(i64, i64, i64, i64)> = (0..n)
                .map(|_| {
                    let a = rng.random_range(0..=coord_max) as i64;
                    let b = a + rng.random_range(0..=p.max_len) as i64;
                    let c = rng.random_range(0..=coord_max) as i64;
                    let d = c + rng.random_range(0..=p.max_len) as i64;
                    (a, b, c, d)
                })
                .collect();
            let aug = if p.connected {
                connect_trapezoids(&mut traps)
            } else {
                0
            };
            (InputDocument::Trapezoid(TrapezoidRep::new(traps)?), aug)
        }
        GraphClass::CircularArc => {
            let c = coord_max + 1;
            if !(2..=MAX_CIRCUMFERENCE).contains(&c) {
                return Err(fail("circumference must be at least 2"));
            }
            let top = p.max_len.clamp(1, c - 1);
            let mut arcs: Vec<(u64, u64)> = (0..n)
                .map(|_| {
                    let len = rng.random_range(1..=top);
                    let s = if rng.random_bool(p.wrap_prob) {
                        rng.random_range(c - len..c)
                    } else {
                        rng.random_range(0..c - len)
                    };
                    (s, (s + len) % c)
                })
                .collect();
            let aug = if p.connected {
                connect_arcs(c, &mut arcs)
            } else {
                0
            };
            (InputDocument::CircularArc(ArcRep::new(c, arcs)?), aug)
        }
        GraphClass::Permutation => {
            let mut pi: Vec<usize> = (1..=n).collect();
            pi.shuffle(&mut rng);
            let aug = if p.connected {
                connect_permutation(&mut pi)
            } else {
                0
            };
            (InputDocument::Permutation(PermutationRep::new(pi)?), aug)
        }
        GraphClass::Cactus => (InputDocument::Cactus(random_cactus(n, p, &mut rng)?), 0),
    };
    Ok(Generated {
        document,
        augmented,
    })
}

/// Sweeps by left endpoint; where the next interval starts after everything
/// so far ends, its left endpoint is pulled back to touch.
fn connect_intervals(iv: &mut [(i64, i64)]) -> usize {
    let mut order: Vec<usize> = (0..iv.len()).collect();
    order.sort_by_key(|&k| iv[k].0);
    let mut reach = i64::MIN;
    let mut fixed = 0;
    for (t, &k) in order.iter().enumerate() {
        if t > 0 && iv[k].0 > reach {
            iv[k].0 = reach;
            fixed += 1;
        }
        reach = reach.max(iv[k].1);
    }
    fixed
}

/// Components of a trapezoid graph are contiguous in order of `a`, and a split
/// after a prefix exists iff the prefix lies strictly left of the rest on both
/// lines. Each split is closed by lowering the next trapezoid's `a` to the
/// prefix's largest `b`.
fn connect_trapezoids(traps: &mut [(i64, i64, i64, i64)]) -> usize {
    let n = traps.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&k| traps[k].0);
    let mut suffix_min = vec![(i64::MAX, i64::MAX); n + 1];
    for t in (0..n).rev() {
        let (a, _, c, _) = traps[order[t]];
        suffix_min[t] = (suffix_min[t + 1].0.min(a), suffix_min[t + 1].1.min(c));
    }
    let (mut max_b, mut max_d) = (i64::MIN, i64::MIN);
    let mut splits = Vec::new();
    for t in 0..n {
        if t > 0 && max_b < suffix_min[t].0 && max_d < suffix_min[t].1 {
            splits.push((order[t], max_b));
        }
        let (_, b, _, d) = traps[order[t]];
        max_b = max_b.max(b);
        max_d = max_d.max(d);
    }
    for &(k, b) in &splits {
        traps[k].0 = b;
    }
    splits.len()
}

/// Finds a unit stretch `(t, t + 1)` no arc covers, cuts the circle there and
/// repairs the resulting line like intervals. A fully covered circle is
/// already connected.
fn connect_arcs(c: u64, arcs: &mut [(u64, u64)]) -> usize {
    let mut spans: Vec<(u64, u64)> = Vec::with_capacity(2 * arcs.len());
    for &(s, e) in arcs.iter() {
        // Unit stretches s..e (exclusive end), split at the wrap.
        if s < e {
            spans.push((s, e));
        } else {
            spans.push((s, c));
            spans.push((0, e));
        }
    }
    spans.sort_unstable();
    let mut covered_to = 0u64;
    let mut gap = None;
    for &(l, r) in &spans {
        if l > covered_to {
            gap = Some(covered_to);
            break;
        }
        covered_to = covered_to.max(r);
    }
    if gap.is_none() && covered_to < c {
        gap = Some(covered_to);
    }
    let Some(t) = gap else {
        return 0;
    };
    // Re-origin at t + 1: no arc crosses the cut, so every arc is an interval.
    let origin = (t + 1) % c;
    let shift = |x: u64| ((x + c - origin) % c) as i64;
    let mut iv: Vec<(i64, i64)> = arcs
        .iter()
        .map(|&(s, e)| {
            let l = shift(s);
            let len = ((e + c - s) % c) as i64;
            (l, l + len)
        })
        .collect();
    debug_assert!(iv.iter().all(|&(_, r)| r < c as i64));
    let fixed = connect_intervals(&mut iv);
    for (arc, &(l, r)) in arcs.iter_mut().zip(&iv) {
        let back = |x: i64| (x as u64 + origin) % c;
        *arc = (back(l), back(r));
    }
    fixed
}

/// A permutation graph splits exactly after positions `p` whose prefix holds
/// `{1..p}`; swapping positions `p` and `p + 1` removes that split and no other
/// prefix set changes.
fn connect_permutation(pi: &mut [usize]) -> usize {
    let mut fixed = 0;
    let mut prefix_max = 0;
    for p in 1..pi.len() {
        prefix_max = prefix_max.max(pi[p - 1]);
        if prefix_max == p {
            pi.swap(p - 1, p);
            prefix_max = prefix_max.max(pi[p - 1]);
            fixed += 1;
        }
    }
    fixed
}

/// Random block tree: each new block hangs off a uniformly chosen existing
/// vertex and is an edge with probability `edge_prob`, otherwise a cycle whose
/// length is drawn from `cycle_len` (clipped to the vertices still needed).
/// Vertex ids and edge order are shuffled at the end.
fn random_cactus(n: usize, p: &GenParams, rng: &mut Pcg64) -> Result<CactusRep> {
    let (cmin, cmax) = p.cycle_len;
    if cmin < 3 || cmax < cmin {
        return Err(fail("cycle lengths must satisfy 3 <= min <= max"));
    }
    let (wmin, wmax) = p.weight;
    if wmin < 1 || wmax < wmin {
        return Err(fail("weights must satisfy 1 <= min <= max"));
    }
    let mut edges: Vec<(usize, usize, u64)> = Vec::with_capacity(2 * n);
    let mut count = 1usize;
    while count < n {
        let anchor = rng.random_range(1..=count);
        let remaining = n - count;
        let cycle = !rng.random_bool(p.edge_prob) && remaining + 1 >= cmin;
        if cycle {
            let len = rng.random_range(cmin..=cmax.min(remaining + 1));
            let mut prev = anchor;
            for _ in 1..len {
                count += 1;
                edges.push((prev, count, rng.random_range(wmin..=wmax)));
                prev = count;
            }
            edges.push((prev, anchor, rng.random_range(wmin..=wmax)));
        } else {
            count += 1;
            edges.push((anchor, count, rng.random_range(wmin..=wmax)));
        }
    }
    let mut label: Vec<usize> = (1..=n).collect();
    label.shuffle(rng);
    for e in edges.iter_mut() {
        *e = (label[e.0 - 1], label[e.1 - 1], e.2);
    }
    edges.shuffle(rng);
    CactusRep::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::serialize_document;
    use crate::graph::ShortestPaths;
    use crate::{circular_arc, interval, permutation, trapezoid, validate_cactus};

    fn connected(doc: &InputDocument) -> bool {
        let g = match doc {
            InputDocument::Interval(r) => interval::build_explicit(r),
            InputDocument::CircularArc(r) => circular_arc::build_explicit(r),
            InputDocument::Permutation(r) => permutation::build_explicit(r),
            InputDocument::Trapezoid(r) => trapezoid::build_explicit(r),
            InputDocument::Cactus(r) => r.to_explicit(),
        };
        g.sssp(1).unwrap().as_slice().iter().all(Option::is_some)
    }

    #[test]
    fn deterministic() {
        for class in GraphClass::ALL {
            let spec = GenSpec::new(class, 40, 7);
            let a = serialize_document(&generate(&spec).unwrap().document);
            let b = serialize_document(&generate(&spec).unwrap().document);
            assert_eq!(a, b);
            let other = GenSpec::new(class, 40, 8);
            assert_ne!(a, serialize_document(&generate(&other).unwrap().document));
        }
    }

    #[test]
    fn single_vertex() {
        for class in GraphClass::ALL {
            let g = generate(&GenSpec::new(class, 1, 3)).unwrap();
            assert_eq!(g.document.vertex_count(), 1);
        }
    }

    #[test]
    fn cactus_is_valid() {
        for seed in 0..50 {
            let mut spec = GenSpec::new(GraphClass::Cactus, 1 + seed as usize, seed);
            spec.params.edge_prob = 0.3;
            let InputDocument::Cactus(rep) = generate(&spec).unwrap().document else {
                unreachable!()
            };
            assert_eq!(rep.n(), 1 + seed as usize);
            validate_cactus(&rep).unwrap();
        }
    }

    #[test]
    fn connected_repair() {
        for class in GraphClass::ALL {
            let mut repaired = 0;
            for seed in 0..60 {
                let mut spec = GenSpec::new(class, 30, seed).connected();
                spec.params.coord_max = Some(200);
                spec.params.max_len = 6;
                spec.params.wrap_prob = 0.3;
                let g = generate(&spec).unwrap();
                repaired += g.augmented;
                assert!(connected(&g.document), "{class} seed {seed}");
            }
            if class != GraphClass::Cactus {
                assert!(repaired > 0, "{class}: sparse instances should need repair");
            }
        }
    }

    #[test]
    fn bad_params() {
        assert!(generate(&GenSpec::new(GraphClass::Interval, 0, 1)).is_err());
        let mut spec = GenSpec::new(GraphClass::Cactus, 5, 1);
        spec.params.cycle_len = (2, 4);
        assert!(generate(&spec).is_err());
        let mut spec = GenSpec::new(GraphClass::CircularArc, 5, 1);
        spec.params.coord_max = Some(0);
        assert!(generate(&spec).is_err());
    }
}
