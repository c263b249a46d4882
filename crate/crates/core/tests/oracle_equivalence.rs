mod common;

use common::{reference_matrix, reference_wiener, rows_as_matrix, varied_spec};
use wig_core::run::{oracle_solver, specialized_solver};
use wig_core::{distance_matrix, generate, wiener_index, Error, GraphClass, WorkCounter};

fn check_class(class: GraphClass, instances: u64) {
    let (mut connected, mut disconnected) = (0, 0);
    for k in 0..instances {
        let n = 1 + (k as usize * 7) % 40;
        let spec = varied_spec(class, n, k);
        let doc = generate(&spec).unwrap().document;
        let expected = reference_matrix(&doc);

        let fast = specialized_solver(&doc).unwrap();
        let slow = oracle_solver(&doc);
        let (rows, _) = distance_matrix(fast.as_ref(), false).unwrap();
        assert_eq!(
            rows_as_matrix(&rows),
            expected,
            "{class} specialized, {spec:?}"
        );
        let (rows, _) = distance_matrix(slow.as_ref(), false).unwrap();
        assert_eq!(
            rows_as_matrix(&rows),
            expected,
            "{class} explicit, {spec:?}"
        );

        match (
            reference_wiener(&expected),
            wiener_index(fast.as_ref(), k % 2 == 0),
        ) {
            (Some(w), Ok((got, _))) => {
                assert_eq!(got.get(), w);
                connected += 1;
            }
            (None, Err(Error::DisconnectedGraph)) => disconnected += 1,
            (want, got) => panic!("{class} Wiener mismatch: {want:?} vs {got:?}, {spec:?}"),
        }
    }
    assert!(
        connected > instances / 2,
        "{class}: only {connected} connected"
    );
    if class != GraphClass::Cactus {
        assert!(
            disconnected > 0,
            "{class}: sweep never produced a disconnected graph"
        );
    }
}

#[test]
fn interval_matches_reference() {
    check_class(GraphClass::Interval, 150);
}

#[test]
fn circular_arc_matches_reference() {
    check_class(GraphClass::CircularArc, 150);
}

#[test]
fn permutation_matches_reference() {
    check_class(GraphClass::Permutation, 150);
}

#[test]
fn trapezoid_matches_reference() {
    check_class(GraphClass::Trapezoid, 150);
}

#[test]
fn cactus_matches_reference() {
    check_class(GraphClass::Cactus, 150);
}

#[test]
fn sources_are_independent() {
    // Any single source gives the same row as the full matrix computation.
    let doc = generate(&varied_spec(GraphClass::CircularArc, 30, 7))
        .unwrap()
        .document;
    let expected = reference_matrix(&doc);
    let g = specialized_solver(&doc).unwrap();
    for s in (1..=30).rev() {
        let mut w = WorkCounter::default();
        let row = g.sssp_counted(s, &mut w).unwrap();
        assert_eq!(row.source(), s);
        assert_eq!(row.as_slice(), &expected[s - 1][..]);
    }
    assert!(g.sssp(0).is_err());
    assert!(g.sssp(31).is_err());
}
