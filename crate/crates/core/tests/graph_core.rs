mod common;

use common::arb_graph;
use hcs_core::graph::{average_degree, rational, two_graph_counts, GraphJson, SimpleGraph};
use num_rational::BigRational;
use proptest::prelude::*;

#[test]
fn doubled_counts_of_small_graphs() {
    let v = two_graph_counts(&SimpleGraph::complete(4), 2).unwrap();
    assert_eq!(v.two_edge_count(), 16);
    assert_eq!(v.e_bar(), rational(4, 1));
    assert_eq!(v.v_bar(), rational(2, 1));

    let c8 = two_graph_counts(&SimpleGraph::cycle(8), 2).unwrap();
    assert_eq!(c8.e_bar(), rational(6, 1));
    assert_eq!(c8.excess(), rational(3, 1));
}

#[test]
fn json_round_trip() {
    let g = hcs_core::fixtures::glued_k4();
    let text = serde_json::to_string(&g.to_json()).unwrap();
    assert!(text.starts_with(r#"{"n":6,"edges":[[0,1],"#));
    let back: GraphJson = serde_json::from_str(&text).unwrap();
    assert_eq!(SimpleGraph::try_from(back).unwrap(), g);
}

#[test]
fn json_rejects_bad_edges() {
    for bad in [r#"{"n":3,"edges":[[0,3]]}"#, r#"{"n":3,"edges":[[1,1]]}"#] {
        let json: GraphJson = serde_json::from_str(bad).unwrap();
        assert!(SimpleGraph::try_from(json).is_err(), "{bad}");
    }
}

#[test]
fn dot_lists_every_edge() {
    let dot = SimpleGraph::path(3).to_dot();
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
}

#[test]
fn average_degree_is_exact() {
    assert_eq!(average_degree(&SimpleGraph::star(3)).unwrap(), rational(3, 2));
    assert!(average_degree(&SimpleGraph::empty(0)).is_err());
}

proptest! {
    #[test]
    fn doubled_edge_identity(g in arb_graph(14), k in 1usize..5) {
        let view = two_graph_counts(&g, k).unwrap();
        let lhs = view.e_bar() * BigRational::from_integer((k * k).into());
        prop_assert_eq!(lhs, rational(2 * g.edge_count() + g.n(), 1));
    }

    #[test]
    fn normalized_edges_at_most_squared_vertices(g in arb_graph(14), k in 1usize..5) {
        let view = two_graph_counts(&g, k).unwrap();
        let vb = view.v_bar();
        prop_assert!(view.e_bar() <= &vb * &vb);
        prop_assert_eq!(view.e_bar() == &vb * &vb, g.is_complete());
    }

    #[test]
    fn induced_subgraphs_nest(g in arb_graph(14), pick in any::<u16>(), sub in any::<u16>()) {
        let w: Vec<usize> = (0..g.n()).filter(|&v| pick >> v & 1 == 1).collect();
        let outer = g.induced_subgraph(w.iter().copied()).unwrap();
        let all: Vec<usize> = (0..outer.graph.n()).collect();
        let again = outer.graph.induced_subgraph(all).unwrap();
        prop_assert_eq!(&again.graph, &outer.graph);

        let local: Vec<usize> = (0..outer.graph.n()).filter(|&v| sub >> v & 1 == 1).collect();
        let inner = outer.graph.induced_subgraph(local.iter().copied()).unwrap();
        for (a, b) in inner.graph.edges() {
            let (pa, pb) = (inner.vertex_map[a], inner.vertex_map[b]);
            prop_assert!(outer.graph.has_edge(pa, pb));
            prop_assert!(g.has_edge(outer.vertex_map[pa], outer.vertex_map[pb]));
        }
        prop_assert_eq!(outer.graph.edge_count(), g.edges_within(&w));
    }
}
