//! Undirected simple graphs and the doubled-edge ("²graph") accounting view.
//!
//! The doubled view of a graph `G` on the same vertex set has every edge
//! doubled and a loop at every vertex, so it carries `2e(G) + v(G)` edges.
//! It is never materialized: [`TwoGraphView`] only exposes the normalized
//! counts `v̄ = v/k` and `ē = e(²G)/k²` as exact rationals.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type VertexSet = BTreeSet<Vertex>;

pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

/// Undirected graph without loops or parallel edges on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct SimpleGraph {
    /// Sorted neighbor lists.
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

/// Wire form: `{"n": <int>, "edges": [[u, v], ...]}` with `u < v`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        let edges: Vec<_> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(json.n, &edges)
    }
}

impl From<SimpleGraph> for GraphJson {
    fn from(g: SimpleGraph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Loops, duplicates (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                return Err(Error::InvalidEdge(u, v, "duplicate edge"));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        if n >= 3 {
            for u in 0..n {
                g.insert_unchecked(u, (u + 1) % n);
            }
        } else if n == 2 {
            g.insert_unchecked(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 1..n {
            g.insert_unchecked(u - 1, u);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = SimpleGraph::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert_unchecked(0, v);
        }
        g
    }

    /// Inserts `{u, v}`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidEdge(u, v, "loop"));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.insert_unchecked(u, v);
        Ok(true)
    }

    fn insert_unchecked(&mut self, u: Vertex, v: Vertex) {
        for (a, b) in [(u, v), (v, u)] {
            let row = &mut self.adj[a];
            if let Err(pos) = row.binary_search(&b) {
                row.insert(pos, b);
            }
        }
        self.edge_count += 1;
    }

    /// Copy of the graph without the edge `{u, v}`.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<SimpleGraph> {
        if !self.has_edge(u, v) {
            return Err(Error::InvalidEdge(u, v, "not an edge of the graph"));
        }
        let mut g = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let row = &mut g.adj[a];
            let pos = row.binary_search(&b).expect("edge present");
            row.remove(pos);
        }
        g.edge_count -= 1;
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// Lowest-indexed vertex of minimum degree.
    pub fn min_degree_vertex(&self) -> Option<Vertex> {
        (0..self.n()).min_by_key(|&v| (self.degree(v), v))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.min_degree_vertex().map(|v| self.degree(v))
    }

    /// Connected components of the graph with `removed` vertices deleted,
    /// each sorted, ordered by their smallest vertex.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = removed.to_vec();
        seen.resize(n, false);
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[]).len() <= 1
    }

    /// Subgraph induced by `vertices`, relabeled `0..|W|` in increasing
    /// order of the original labels.
    pub fn induced_subgraph<I>(&self, vertices: I) -> Result<InducedSubgraph>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let n = self.n();
        let mut map: Vec<Vertex> = vertices.into_iter().collect();
        map.sort_unstable();
        map.dedup();
        if let Some(&bad) = map.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut local = vec![usize::MAX; n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut graph = SimpleGraph::empty(map.len());
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            // neighbor rows stay sorted because `local` is monotone on `map`
            graph.adj[i] = self.adj[v]
                .iter()
                .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                .collect();
            m += graph.adj[i].len();
        }
        graph.edge_count = m / 2;
        Ok(InducedSubgraph { graph, vertex_map: map })
    }

    /// Number of edges with both ends in `vertices`.
    pub fn edges_within(&self, vertices: &[Vertex]) -> usize {
        let set: BTreeSet<_> = vertices.iter().copied().collect();
        set.iter()
            .map(|&u| self.adj[u].iter().filter(|&&w| w > u && set.contains(&w)).count())
            .sum()
    }

    pub fn to_json(&self) -> GraphJson {
        self.clone().into()
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Result of [`SimpleGraph::induced_subgraph`]: local vertex `i` is
/// `vertex_map[i]` in the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: SimpleGraph,
    pub vertex_map: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn parent_vertices<'a, I>(&self, local: I) -> Vec<Vertex>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        local.into_iter().map(|&v| self.vertex_map[v]).collect()
    }
}

/// Exact average degree `2e/v`.
pub fn average_degree(g: &SimpleGraph) -> Result<BigRational> {
    if g.n() == 0 {
        return Err(Error::Domain("average degree of the empty vertex set".into()));
    }
    Ok(rational(2 * g.edge_count(), g.n()))
}

/// A graph together with the scale `k` used to normalize its doubled view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGraphView {
    base: SimpleGraph,
    k: usize,
}

pub fn two_graph_counts(g: &SimpleGraph, k: usize) -> Result<TwoGraphView> {
    TwoGraphView::new(g.clone(), k)
}

impl TwoGraphView {
    pub fn new(base: SimpleGraph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Parameter("k must be positive".into()));
        }
        Ok(TwoGraphView { base, k })
    }

    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `e(²G) = 2e(G) + v(G)`.
    pub fn two_edge_count(&self) -> u64 {
        2 * self.base.edge_count() as u64 + self.base.n() as u64
    }

    pub fn v_bar(&self) -> BigRational {
        rational(self.base.n(), self.k)
    }

    pub fn e_bar(&self) -> BigRational {
        rational(self.two_edge_count(), self.k * self.k)
    }

    /// `g = v̄ − 1`.
    pub fn excess(&self) -> BigRational {
        self.v_bar() - rational(1, 1)
    }

    /// Anticlique profile of pairwise disjoint independent vertex sets.
    pub fn anticlique_profile(&self, sets: &[Vec<Vertex>]) -> Result<AnticliqueProfile> {
        let n = self.base.n();
        let mut used = vec![false; n];
        for set in sets {
            for &v in set {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if used[v] {
                    return Err(Error::Domain(format!("vertex {v} lies in two anticliques")));
                }
                used[v] = true;
            }
            if self.base.edges_within(set) != 0 {
                return Err(Error::Domain("anticlique vertex set spans an edge".into()));
            }
        }
        let sizes = sets.iter().map(|s| rational(s.len(), self.k)).collect();
        AnticliqueProfile::new(sizes)
    }
}

/// Normalized sizes `v̄(G_i)` of disjoint anticliques.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnticliqueProfile {
    sizes: Vec<BigRational>,
}

impl AnticliqueProfile {
    pub fn new(sizes: Vec<BigRational>) -> Result<Self> {
        if sizes.iter().any(|s| s.is_negative()) {
            return Err(Error::Domain("anticlique sizes must be non-negative".into()));
        }
        Ok(AnticliqueProfile { sizes })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn sizes(&self) -> &[BigRational] {
        &self.sizes
    }

    pub fn total(&self) -> BigRational {
        self.sizes.iter().fold(BigRational::zero(), |acc, s| acc + s)
    }

    pub fn sum_of_squares(&self) -> BigRational {
        self.sizes.iter().fold(BigRational::zero(), |acc, s| acc + s * s)
    }

    /// Disjointness bound against a host with normalized size `v_bar`.
    pub fn fits_in(&self, v_bar: &BigRational) -> bool {
        &self.total() <= v_bar
    }

    /// Profile with entries `i` and `j` replaced by their sum.
    pub fn merged(&self, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= self.sizes.len() || j >= self.sizes.len() {
            return Err(Error::Domain(format!("cannot merge entries {i} and {j}")));
        }
        let mut sizes: Vec<_> = self
            .sizes
            .iter()
            .enumerate()
            .filter(|&(idx, _)| idx != i && idx != j)
            .map(|(_, s)| s.clone())
            .collect();
        sizes.push(&self.sizes[i] + &self.sizes[j]);
        Ok(AnticliqueProfile { sizes })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k4_sharing_pair() -> SimpleGraph {
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

    #[test]
    fn average_degree_examples() {
        assert_eq!(average_degree(&SimpleGraph::complete(4)).unwrap(), rational(3, 1));
        assert_eq!(average_degree(&SimpleGraph::cycle(5)).unwrap(), rational(2, 1));
        assert_eq!(average_degree(&SimpleGraph::empty(7)).unwrap(), rational(0, 1));
        assert!(matches!(average_degree(&SimpleGraph::empty(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn two_graph_examples() {
        let v = two_graph_counts(&SimpleGraph::path(3), 1).unwrap();
        assert_eq!(v.two_edge_count(), 7);
        assert_eq!(v.v_bar(), rational(3, 1));
        assert_eq!(v.e_bar(), rational(7, 1));

        let v = two_graph_counts(&SimpleGraph::complete(4), 2).unwrap();
        assert_eq!(v.two_edge_count(), 16);
        assert_eq!(v.v_bar(), rational(2, 1));
        assert_eq!(v.e_bar(), v.v_bar() * v.v_bar());

        let v = two_graph_counts(&SimpleGraph::empty(5), 5).unwrap();
        assert_eq!(v.two_edge_count(), 5);
        assert_eq!(v.v_bar(), rational(1, 1));
        assert_eq!(v.e_bar(), rational(1, 5));

        assert!(two_graph_counts(&SimpleGraph::empty(3), 0).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = SimpleGraph::complete(4);
        let sub = k4.induced_subgraph([0, 2, 3]).unwrap();
        assert_eq!(sub.graph, SimpleGraph::complete(3));
        assert_eq!(sub.vertex_map, vec![0, 2, 3]);

        let c5 = SimpleGraph::cycle(5);
        let sub = c5.induced_subgraph([3, 4]).unwrap();
        assert_eq!(sub.graph.edge_count(), 1);

        let sub = c5.induced_subgraph([]).unwrap();
        assert_eq!(sub.graph.n(), 0);
        assert_eq!(sub.graph.edge_count(), 0);

        assert!(matches!(
            c5.induced_subgraph([1, 7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(SimpleGraph::from_edges(3, &[(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn json_roundtrip_and_dot() {
        let g = two_k4_sharing_pair();
        let text = serde_json::to_string(&g).unwrap();
        assert!(text.starts_with("{\"n\":6,\"edges\":[[0,1],"));
        let back: SimpleGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());

        let dot = SimpleGraph::path(2).to_dot();
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn anticlique_profiles() {
        let view = two_graph_counts(&SimpleGraph::cycle(6), 2).unwrap();
        let p = view.anticlique_profile(&[vec![0, 2, 4], vec![1]]).unwrap();
        assert_eq!(p.sizes(), &[rational(3, 2), rational(1, 2)]);
        assert!(p.fits_in(&view.v_bar()));
        assert!(view.anticlique_profile(&[vec![0, 1]]).is_err());
        assert!(view.anticlique_profile(&[vec![0], vec![0, 2]]).is_err());
        assert!(AnticliqueProfile::new(vec![rational(-1, 2)]).is_err());
    }
}
