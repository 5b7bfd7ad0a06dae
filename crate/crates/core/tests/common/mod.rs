//! Shared helpers for the integration tests: seeded random graphs and
//! naive oracles written directly against adjacency matrices, independent of
//! the library's flow and bitmask code.

#![allow(dead_code)]

use hcs_core::graph::SimpleGraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gnp(seed: u64, n: usize, p: f64) -> SimpleGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random graph on at most `max_n` vertices with a random edge density.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| gnp(seed, n, p))
}

pub fn matrix(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Whether the vertices of `mask` induce a connected graph (empty counts as
/// connected).
pub fn connected(adj: &[Vec<bool>], mask: u32) -> bool {
    let verts = members(mask);
    let Some(&start) = verts.first() else { return true };
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in &verts {
            if adj[u][v] && seen >> v & 1 == 0 {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    seen == mask
}

/// Subsets of `mask` with exactly `size` elements.
fn subsets_of_size(mask: u32, size: usize) -> Vec<u32> {
    let verts = members(mask);
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(verts: &[usize], start: usize, size: usize, pick: &mut Vec<usize>, out: &mut Vec<u32>) {
        if pick.len() == size {
            out.push(pick.iter().fold(0, |m, &v| m | 1 << v));
            return;
        }
        for i in start..verts.len() {
            pick.push(verts[i]);
            rec(verts, i + 1, size, pick, out);
            pick.pop();
        }
    }
    rec(&verts, 0, size, &mut pick, &mut out);
    out
}

/// Vertex connectivity by trying every removal set in order of size.
pub fn kappa(g: &SimpleGraph) -> usize {
    let n = g.n();
    let adj = matrix(g);
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for size in 0..n.saturating_sub(1) {
        for s in subsets_of_size(all, size) {
            if !connected(&adj, all & !s) {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

/// `mask` has at least `k + 2` vertices and survives removing any `k`.
pub fn k1_connected(adj: &[Vec<bool>], mask: u32, k: usize) -> bool {
    if (mask.count_ones() as usize) < k + 2 {
        return false;
    }
    (0..=k).all(|size| subsets_of_size(mask, size).into_iter().all(|s| connected(adj, mask & !s)))
}

/// Whether some set of at least `min_size` vertices induces a
/// `(k+1)`-connected subgraph.
pub fn has_k1_connected_subset(g: &SimpleGraph, k: usize, min_size: usize) -> bool {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential");
    let adj = matrix(g);
    (0u32..1 << n).any(|mask| {
        let verts = members(mask);
        verts.len() >= min_size
            && verts.iter().all(|&u| verts.iter().filter(|&&v| adj[u][v]).count() > k)
            && k1_connected(&adj, mask, k)
    })
}

pub fn mask_of(vertices: &[usize]) -> u32 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}
