//! Vertex connectivity, minimum vertex separators and `k`-separations.

mod brute;
mod flow;

use serde::{Deserialize, Serialize};

use crate::graph::{SimpleGraph, Vertex, VertexSet};

pub use brute::{brute_force_min_cut, BRUTE_FORCE_CUT_LIMIT};
use flow::LocalConnectivity;

/// Vertex connectivity together with a minimum separator.
///
/// `separator` is `None` exactly when the graph is complete (`kappa = n − 1`).
/// A disconnected graph has `kappa = 0` and an empty separator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub kappa: usize,
    pub separator: Option<Vec<Vertex>>,
}

/// Computes `κ(G)` with a minimum separator.
pub fn min_vertex_cut(g: &SimpleGraph) -> CutWitness {
    connectivity_up_to(g, usize::MAX).expect("unbounded search always yields a witness")
}

/// Like [`min_vertex_cut`] but gives up as soon as `κ(G) > cap` is certain,
/// returning `None` in that case.
pub fn connectivity_up_to(g: &SimpleGraph, cap: usize) -> Option<CutWitness> {
    let n = g.n();
    if g.is_complete() {
        let kappa = n.saturating_sub(1);
        return (kappa <= cap).then_some(CutWitness { kappa, separator: None });
    }
    if !g.is_connected() {
        return Some(CutWitness { kappa: 0, separator: Some(Vec::new()) });
    }

    // A minimum separator S either misses the minimum-degree vertex v, and
    // then splits v from some non-neighbor, or contains v, and then v has
    // neighbors in two components of G − S, which are non-adjacent.
    let v = g.min_degree_vertex().expect("non-empty graph");
    let mut best = cap.saturating_add(1);
    let mut best_sep = None;
    if g.degree(v) < best {
        best = g.degree(v);
        best_sep = Some(g.neighbors(v).to_vec());
    }

    let mut solver = LocalConnectivity::new(g);
    let mut consider = |s: Vertex, t: Vertex, best: &mut usize, best_sep: &mut Option<Vec<Vertex>>| {
        if *best == 0 {
            return;
        }
        let cut = solver.query(s, t, *best);
        if cut.size < *best {
            *best = cut.size;
            *best_sep = cut.separator;
        }
    };

    for w in 0..n {
        if w != v && !g.has_edge(v, w) {
            consider(v, w, &mut best, &mut best_sep);
        }
    }
    let nbrs = g.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                consider(x, y, &mut best, &mut best_sep);
            }
        }
    }

    best_sep.map(|mut sep| {
        sep.sort_unstable();
        CutWitness { kappa: best, separator: Some(sep) }
    })
}

/// True iff `G` has at least `k + 2` vertices and `κ(G) ≥ k + 1`.
pub fn is_k1_connected(g: &SimpleGraph, k: usize) -> bool {
    g.n() >= k + 2 && connectivity_up_to(g, k).is_none()
}

/// A pair of vertex sets covering the graph, intersecting in exactly `k`
/// vertices, neither spanning, with no edge between the private parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub core: VertexSet,
}

impl Separation {
    pub fn private_a(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.side_a.difference(&self.side_b).copied()
    }

    pub fn private_b(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.side_b.difference(&self.side_a).copied()
    }

    /// Checks every separation invariant against `g`; returns the first
    /// violated one.
    pub fn check(&self, g: &SimpleGraph, k: usize) -> Result<(), String> {
        let n = g.n();
        if let Some(&v) = self.side_a.iter().chain(&self.side_b).find(|&&v| v >= n) {
            return Err(format!("vertex {v} out of range"));
        }
        if self.side_a.union(&self.side_b).count() != n {
            return Err("sides do not cover the vertex set".into());
        }
        let inter: VertexSet = self.side_a.intersection(&self.side_b).copied().collect();
        if inter != self.core {
            return Err("core differs from the intersection of the sides".into());
        }
        if self.core.len() != k {
            return Err(format!("core has {} vertices, expected {k}", self.core.len()));
        }
        if self.side_a.len() == n || self.side_b.len() == n {
            return Err("a side spans the whole graph".into());
        }
        let only_b: VertexSet = self.private_b().collect();
        for u in self.private_a() {
            if let Some(&w) = g.neighbors(u).iter().find(|w| only_b.contains(w)) {
                return Err(format!("edge {{{u}, {w}}} crosses the separation"));
            }
        }
        Ok(())
    }
}

/// Finds a separation with a core of exactly `k` vertices, which exists iff
/// `v(G) ≥ k + 2` and `κ(G) ≤ k`.
///
/// Side A is the minimum separator plus the component of its complement that
/// holds the smallest vertex; side B takes the rest. A separator smaller than
/// `k` is padded by repeatedly moving the lowest private vertex of the larger
/// side (ties: side A) into the core.
pub fn find_separation(g: &SimpleGraph, k: usize) -> Option<Separation> {
    let n = g.n();
    if n < k + 2 {
        return None;
    }
    let cut = connectivity_up_to(g, k)?;
    let separator = cut.separator?;

    let mut removed = vec![false; n];
    for &v in &separator {
        removed[v] = true;
    }
    let comps = g.components_without(&removed);
    debug_assert!(comps.len() >= 2);

    let core: VertexSet = separator.into_iter().collect();
    let mut side_a = core.clone();
    side_a.extend(comps[0].iter().copied());
    let mut side_b = core.clone();
    side_b.extend(comps[1..].iter().flatten().copied());

    let mut core = core;
    while core.len() < k {
        let (from, to) = if side_a.len() >= side_b.len() {
            (&side_a, &mut side_b)
        } else {
            (&side_b, &mut side_a)
        };
        let v = *from
            .iter()
            .find(|v| !core.contains(v))
            .expect("both private parts stay non-empty while padding");
        to.insert(v);
        core.insert(v);
    }
    Some(Separation { side_a, side_b, core })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn glued_k4() -> SimpleGraph {
        let mut g = SimpleGraph::empty(6);
        for block in [[0, 1, 2, 3], [2, 3, 4, 5]] {
            for i in 0..4 {
                for j in i + 1..4 {
                    g.add_edge(block[i], block[j]).unwrap();
                }
            }
        }
        g
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn min_cut_examples() {
        assert_eq!(
            min_vertex_cut(&SimpleGraph::complete(5)),
            CutWitness { kappa: 4, separator: None }
        );
        assert_eq!(
            min_vertex_cut(&SimpleGraph::path(3)),
            CutWitness { kappa: 1, separator: Some(vec![1]) }
        );
        assert_eq!(
            min_vertex_cut(&glued_k4()),
            CutWitness { kappa: 2, separator: Some(vec![2, 3]) }
        );
        let mut disconnected = SimpleGraph::complete(3);
        disconnected = {
            let mut h = SimpleGraph::empty(5);
            for (u, v) in disconnected.edges() {
                h.add_edge(u, v).unwrap();
            }
            h.add_edge(3, 4).unwrap();
            h
        };
        assert_eq!(
            min_vertex_cut(&disconnected),
            CutWitness { kappa: 0, separator: Some(vec![]) }
        );
        assert_eq!(min_vertex_cut(&SimpleGraph::empty(1)).kappa, 0);
        assert_eq!(min_vertex_cut(&SimpleGraph::cycle(7)).kappa, 2);
    }

    #[test]
    fn k1_connectivity_examples() {
        assert!(is_k1_connected(&SimpleGraph::complete(4), 2));
        assert!(!is_k1_connected(&glued_k4(), 2));
        assert!(!is_k1_connected(&SimpleGraph::complete(3), 2));
        assert!(is_k1_connected(&SimpleGraph::cycle(5), 1));
    }

    #[test]
    fn separation_examples() {
        let g = glued_k4();
        let sep = find_separation(&g, 2).unwrap();
        assert_eq!(sep.side_a, set(&[0, 1, 2, 3]));
        assert_eq!(sep.side_b, set(&[2, 3, 4, 5]));
        assert_eq!(sep.core, set(&[2, 3]));
        sep.check(&g, 2).unwrap();

        let sep = find_separation(&g, 3).unwrap();
        assert_eq!(sep.side_a, set(&[0, 1, 2, 3]));
        assert_eq!(sep.side_b, set(&[0, 2, 3, 4, 5]));
        assert_eq!(sep.core, set(&[0, 2, 3]));
        sep.check(&g, 3).unwrap();

        assert!(find_separation(&SimpleGraph::complete(4), 2).is_none());
        assert!(find_separation(&SimpleGraph::empty(3), 2).is_none());
    }

    #[test]
    fn disconnected_graph_is_padded() {
        let g = SimpleGraph::empty(5);
        let sep = find_separation(&g, 2).unwrap();
        sep.check(&g, 2).unwrap();
        assert_eq!(sep.side_a, set(&[0, 1, 2]));
        assert_eq!(sep.core, set(&[1, 2]));
    }

    #[test]
    fn check_reports_violations() {
        let g = glued_k4();
        let bad = Separation {
            side_a: set(&[0, 1, 2]),
            side_b: set(&[2, 3, 4, 5]),
            core: set(&[2]),
        };
        assert!(bad.check(&g, 1).unwrap_err().contains("crosses"));
        let spanning = Separation {
            side_a: set(&[0, 1, 2, 3, 4, 5]),
            side_b: set(&[2, 3]),
            core: set(&[2, 3]),
        };
        assert!(spanning.check(&g, 2).is_err());
    }
}
