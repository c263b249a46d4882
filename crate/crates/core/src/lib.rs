//! Wiener index computation for cactus, interval, circular-arc, permutation
//! and trapezoid graphs, working directly on each class's representation.
//!
//! Every class exposes its representation type, the adjacency predicate, a
//! graph type implementing [`ShortestPaths`] without materializing edges, and
//! `*_wiener` / `*_sssp` convenience functions. [`ExplicitGraph`] with
//! [`bfs_sssp`] / [`dijkstra_sssp`] is the brute-force reference.

pub mod cactus;
pub mod circular_arc;
pub mod document;
mod dominance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod permutation;
pub mod run;
pub mod trapezoid;
pub mod wiener;

pub use cactus::{cactus_sssp, cactus_wiener, validate_cactus, Block, BlockCutTree, CactusRep};
pub use circular_arc::{arc_edge, circ_sssp, circ_wiener, ArcGraph, ArcRep};
pub use document::{parse_document, serialize_document, GraphClass, InputDocument};
pub use error::{Error, Result};
pub use generate::{generate, GenParams, GenSpec, Generated};
pub use graph::{
    bfs_sssp, dijkstra_sssp, DistanceRow, ExplicitGraph, ShortestPaths, WorkCounter, WorkSummary,
};
pub use interval::{interval_edge, interval_sssp, interval_wiener, IntervalGraph, IntervalRep};
pub use permutation::{perm_edge, perm_sssp, perm_wiener, PermutationGraph, PermutationRep};
pub use run::{
    convert_document, run_bench, run_compute, Algorithm, BenchRow, BenchSpec, ComputeOptions, Emit,
    RunReport,
};
pub use trapezoid::{trap_edge, trap_sssp, trap_wiener, TrapezoidGraph, TrapezoidRep};
pub use wiener::{distance_matrix, oracle_wiener, wiener_from_rows, wiener_index, WienerValue};
