//! Small named graphs used throughout the tests and examples.

use crate::graph::{SimpleGraph, Vertex};

/// Union of cliques on the given vertex lists.
pub fn clique_union(n: usize, cliques: &[&[Vertex]]) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for clique in cliques {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                g.add_edge(u, v).expect("clique vertices in range");
            }
        }
    }
    g
}

/// Two `K_4` on `{0,1,2,3}` and `{2,3,4,5}`.
pub fn glued_k4() -> SimpleGraph {
    clique_union(6, &[&[0, 1, 2, 3], &[2, 3, 4, 5]])
}

/// Two triangles sharing the edge `{1, 2}`.
pub fn diamond() -> SimpleGraph {
    clique_union(4, &[&[0, 1, 2], &[1, 2, 3]])
}
