//! Fixtures shared by the benchmarks.

use wig_core::run::{oracle_solver, specialized_solver};
use wig_core::{generate, GenSpec, GraphClass, InputDocument, ShortestPaths};

/// Seeded connected instance of `class` with `n` vertices.
pub fn fixture(class: GraphClass, n: usize) -> InputDocument {
    let spec = GenSpec::new(class, n, 0xbe_u64 + n as u64).connected();
    generate(&spec)
        .expect("default parameters are valid")
        .document
}

pub fn specialized(doc: &InputDocument) -> Box<dyn ShortestPaths> {
    specialized_solver(doc).expect("generated cactus is valid")
}

pub fn explicit(doc: &InputDocument) -> Box<dyn ShortestPaths> {
    oracle_solver(doc)
}
