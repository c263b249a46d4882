//! Compute and benchmark drivers behind the command-line tool.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::json;

use crate::cactus::validate_cactus;
use crate::circular_arc::{self, ArcGraph};
use crate::document::{GraphClass, InputDocument};
use crate::error::{Error, Result};
use crate::generate::{generate, GenParams, GenSpec};
use crate::graph::{DistanceRow, ShortestPaths, WorkSummary};
use crate::interval::{self, IntervalGraph};
use crate::permutation::{self, PermutationGraph};
use crate::trapezoid::{self, TrapezoidGraph};
use crate::wiener::{distance_matrix, wiener_index, WienerValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Representation-based sweeps; no edges are built.
    Specialized,
    /// BFS / Dijkstra on the explicit graph.
    Oracle,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Specialized => "specialized",
            Algorithm::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Wiener,
    Distances,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeOptions {
    pub algo: Algorithm,
    pub emit: Emit,
    pub parallel: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        Self {
            algo: Algorithm::Specialized,
            emit: Emit::Wiener,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub class: GraphClass,
    pub n: usize,
    pub algo: Algorithm,
    /// The Wiener index, or why it is undefined. Not computed when only
    /// distances were requested.
    pub wiener: Option<Result<WienerValue>>,
    pub distances: Option<Vec<DistanceRow>>,
    pub work: WorkSummary,
    pub wall: Duration,
}

impl RunReport {
    /// First error that should fail the run.
    pub fn error(&self) -> Option<&Error> {
        match &self.wiener {
            Some(Err(e)) => Some(e),
            _ => None,
        }
    }

    /// Wiener as one decimal line, or the distance matrix with `-` for
    /// unreachable pairs.
    pub fn render_plain(&self) -> String {
        if let Some(rows) = &self.distances {
            let mut out = String::new();
            for row in rows {
                let cells: Vec<String> = row
                    .as_slice()
                    .iter()
                    .map(|d| d.map_or_else(|| "-".to_string(), |d| d.to_string()))
                    .collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
            return out;
        }
        match &self.wiener {
            Some(Ok(w)) => format!("{w}\n"),
            _ => String::new(),
        }
    }

    pub fn render_json(&self) -> String {
        let mut v = json!({
            "class": self.class.as_str(),
            "n": self.n,
            "algo": self.algo.as_str(),
            "vertex_visits": self.work.total_visits,
            "max_vertex_visits": self.work.max_visits,
            "max_layers": self.work.max_layers,
            "wall_ms": self.wall.as_secs_f64() * 1e3,
        });
        match &self.wiener {
            Some(Ok(w)) => v["wiener"] = json!(w.get()),
            Some(Err(e)) => v["error"] = json!(e.to_string()),
            None => {}
        }
        if let Some(rows) = &self.distances {
            v["distances"] = json!(rows
                .iter()
                .map(|r| r.as_slice().to_vec())
                .collect::<Vec<_>>());
        }
        format!("{v}\n")
    }
}

/// The class's specialized solver, boxed behind [`ShortestPaths`].
pub fn specialized_solver(doc: &InputDocument) -> Result<Box<dyn ShortestPaths>> {
    Ok(match doc {
        InputDocument::Interval(r) => Box::new(IntervalGraph::new(r.clone())),
        InputDocument::CircularArc(r) => Box::new(ArcGraph::new(r.clone())),
        InputDocument::Permutation(r) => Box::new(PermutationGraph::new(r.clone())),
        InputDocument::Trapezoid(r) => Box::new(TrapezoidGraph::new(r.clone())),
        InputDocument::Cactus(r) => Box::new(validate_cactus(r)?),
    })
}

/// The explicit graph of any document.
pub fn oracle_solver(doc: &InputDocument) -> Box<dyn ShortestPaths> {
    Box::new(match doc {
        InputDocument::Interval(r) => interval::build_explicit(r),
        InputDocument::CircularArc(r) => circular_arc::build_explicit(r),
        InputDocument::Permutation(r) => permutation::build_explicit(r),
        InputDocument::Trapezoid(r) => trapezoid::build_explicit(r),
        InputDocument::Cactus(r) => r.to_explicit(),
    })
}

/// Re-encode `doc` as an equivalent document of class `to`.
///
/// Supported: interval to trapezoid or circular-arc, permutation to
/// trapezoid, and any class to itself.
pub fn convert_document(doc: &InputDocument, to: GraphClass) -> Result<InputDocument> {
    match (doc, to) {
        (_, to) if to == doc.class() => Ok(doc.clone()),
        (InputDocument::Interval(r), GraphClass::Trapezoid) => {
            Ok(InputDocument::Trapezoid(trapezoid::from_interval(r)))
        }
        (InputDocument::Interval(r), GraphClass::CircularArc) => {
            Ok(InputDocument::CircularArc(circular_arc::from_interval(r)?))
        }
        (InputDocument::Permutation(r), GraphClass::Trapezoid) => {
            Ok(InputDocument::Trapezoid(trapezoid::from_permutation(r)))
        }
        _ => Err(Error::UnsupportedConversion {
            from: doc.class().to_string(),
            to: to.to_string(),
        }),
    }
}

pub fn run_compute(doc: &InputDocument, opts: ComputeOptions) -> RunReport {
    let start = Instant::now();
    let mut report = RunReport {
        class: doc.class(),
        n: doc.vertex_count(),
        algo: opts.algo,
        wiener: None,
        distances: None,
        work: WorkSummary::default(),
        wall: Duration::ZERO,
    };
    let solver = match opts.algo {
        Algorithm::Specialized => specialized_solver(doc),
        Algorithm::Oracle => Ok(oracle_solver(doc)),
    };
    match (solver, opts.emit) {
        (Err(e), _) => report.wiener = Some(Err(e)),
        (Ok(g), Emit::Wiener) => match wiener_index(g.as_ref(), opts.parallel) {
            Ok((w, work)) => {
                report.wiener = Some(Ok(w));
                report.work = work;
            }
            Err(e) => report.wiener = Some(Err(e)),
        },
        (Ok(g), Emit::Distances) => match distance_matrix(g.as_ref(), opts.parallel) {
            Ok((rows, work)) => {
                report.distances = Some(rows);
                report.work = work;
            }
            Err(e) => report.wiener = Some(Err(e)),
        },
    }
    report.wall = start.elapsed();
    report
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub class: GraphClass,
    pub n_start: usize,
    pub n_end: usize,
    pub seed: u64,
    /// Oracle runs are skipped above this size.
    pub oracle_cutoff: usize,
    pub params: GenParams,
    pub parallel: bool,
}

pub const DEFAULT_ORACLE_CUTOFF: usize = 2048;

impl BenchSpec {
    pub fn new(class: GraphClass, n_start: usize, n_end: usize) -> Self {
        Self {
            class,
            n_start,
            n_end,
            seed: 1,
            oracle_cutoff: DEFAULT_ORACLE_CUTOFF,
            params: GenParams {
                connected: true,
                ..GenParams::default()
            },
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub class: GraphClass,
    pub n: usize,
    pub algo: Algorithm,
    /// `None` when the run was skipped.
    pub outcome: Option<Result<WienerValue>>,
    pub work: WorkSummary,
    pub wall: Duration,
}

impl BenchRow {
    pub fn skipped(&self) -> bool {
        self.outcome.is_none()
    }

    pub const CSV_HEADER: &'static str = "class,n,algo,wiener,vertex_visits,layers,wall_ms";

    /// `vertex_visits` and `layers` are the per-source maxima.
    pub fn csv(&self) -> String {
        let head = format!("{},{},{}", self.class, self.n, self.algo.as_str());
        match &self.outcome {
            None => format!("{head},skipped,-,-,-"),
            Some(outcome) => {
                let w = match outcome {
                    Ok(w) => w.to_string(),
                    Err(Error::DisconnectedGraph) => "disconnected".into(),
                    Err(Error::Overflow) => "overflow".into(),
                    Err(_) => "error".into(),
                };
                format!(
                    "{head},{w},{},{},{:.3}",
                    self.work.max_visits,
                    self.work.max_layers,
                    self.wall.as_secs_f64() * 1e3
                )
            }
        }
    }
}

/// Doubling sweep `n_start, 2 n_start, ... <= n_end`. Each size gets one
/// seeded connected instance, timed with the specialized solver and, up to the
/// cutoff, the oracle.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchRow>> {
    if spec.n_start == 0 || spec.n_end < spec.n_start {
        return Err(Error::GenerationFailed(
            "bench sweep needs 1 <= n-start <= n-end".into(),
        ));
    }
    let mut rows = Vec::new();
    let mut n = spec.n_start;
    while n <= spec.n_end {
        let gen = GenSpec {
            class: spec.class,
            n,
            seed: spec.seed,
            params: spec.params.clone(),
        };
        let doc = generate(&gen)?.document;
        for algo in [Algorithm::Specialized, Algorithm::Oracle] {
            if algo == Algorithm::Oracle && n > spec.oracle_cutoff {
                rows.push(BenchRow {
                    class: spec.class,
                    n,
                    algo,
                    outcome: None,
                    work: WorkSummary::default(),
                    wall: Duration::ZERO,
                });
                continue;
            }
            let report = run_compute(
                &doc,
                ComputeOptions {
                    algo,
                    emit: Emit::Wiener,
                    parallel: spec.parallel,
                },
            );
            rows.push(BenchRow {
                class: spec.class,
                n,
                algo,
                outcome: report.wiener,
                work: report.work,
                wall: report.wall,
            });
        }
        n = match n.checked_mul(2) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(rows)
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(BenchRow::CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}
