mod common;

use common::{arb_graph, gnp, kappa};
use hcs_core::connectivity::{brute_force_min_cut, find_separation, is_k1_connected, min_vertex_cut};
use hcs_core::fixtures::glued_k4;
use hcs_core::graph::SimpleGraph;
use proptest::prelude::*;

fn disconnects(g: &SimpleGraph, separator: &[usize]) -> bool {
    let mut removed = vec![false; g.n()];
    for &v in separator {
        removed[v] = true;
    }
    g.components_without(&removed).len() >= 2
}

#[test]
fn named_graphs() {
    let k5 = min_vertex_cut(&SimpleGraph::complete(5));
    assert_eq!((k5.kappa, k5.separator), (4, None));

    let p3 = min_vertex_cut(&SimpleGraph::path(3));
    assert_eq!((p3.kappa, p3.separator), (1, Some(vec![1])));

    let glued = min_vertex_cut(&glued_k4());
    assert_eq!(glued.kappa, kappa(&glued_k4()));
    assert_eq!((glued.kappa, glued.separator), (2, Some(vec![2, 3])));

    let split = min_vertex_cut(&SimpleGraph::empty(3));
    assert_eq!((split.kappa, split.separator), (0, Some(vec![])));
}

#[test]
fn k1_connectivity_of_named_graphs() {
    assert!(is_k1_connected(&SimpleGraph::complete(4), 2));
    assert!(!is_k1_connected(&SimpleGraph::complete(3), 2));
    assert!(!is_k1_connected(&glued_k4(), 2));
    assert!(is_k1_connected(&glued_k4(), 1));
    assert!(is_k1_connected(&SimpleGraph::cycle(5), 1));
}

#[test]
fn glued_separation() {
    let s = find_separation(&glued_k4(), 2).unwrap();
    s.check(&glued_k4(), 2).unwrap();
    assert_eq!(s.core.iter().copied().collect::<Vec<_>>(), vec![2, 3]);
    assert!(find_separation(&SimpleGraph::complete(6), 2).is_none());
}

#[test]
fn connectivity_never_exceeds_min_degree() {
    for seed in 0..200u64 {
        let n = 2 + (seed % 30) as usize;
        let g = gnp(seed, n, 0.1 + (seed % 9) as f64 / 10.0);
        assert!(min_vertex_cut(&g).kappa <= g.min_degree().unwrap(), "seed {seed}");
    }
}

proptest! {
    #[test]
    fn agrees_with_removal_oracle(g in arb_graph(10)) {
        let cut = min_vertex_cut(&g);
        prop_assert_eq!(cut.kappa, kappa(&g));
        prop_assert_eq!(cut.kappa, brute_force_min_cut(&g).unwrap().kappa);
        match &cut.separator {
            None => prop_assert!(g.is_complete()),
            Some(s) => {
                prop_assert_eq!(s.len(), cut.kappa);
                prop_assert!(disconnects(&g, s));
            }
        }
    }

    #[test]
    fn separations_are_valid(g in arb_graph(12), k in 1usize..5) {
        match find_separation(&g, k) {
            Some(s) => prop_assert_eq!(s.check(&g, k), Ok(())),
            None => prop_assert!(is_k1_connected(&g, k) || g.n() <= k + 1),
        }
    }
}
