//! Bitmask adjacency for exhaustive searches on small graphs (n ≤ 32).

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub(crate) type Mask = u32;

#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    adj: Vec<Mask>,
}

impl BitGraph {
    pub(crate) fn new(g: &SimpleGraph, limit: usize) -> Result<Self> {
        if g.n() > limit || g.n() > 32 {
            return Err(Error::TooLarge {
                what: "vertex count",
                got: g.n(),
                limit: limit.min(32),
            });
        }
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
            .collect();
        Ok(BitGraph { adj })
    }

    pub(crate) fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn full(&self) -> Mask {
        if self.n() == 32 {
            Mask::MAX
        } else {
            (1 << self.n()) - 1
        }
    }

    /// True when the subgraph induced by `mask` is connected (and non-empty).
    pub(crate) fn is_connected(&self, mask: Mask) -> bool {
        if mask == 0 {
            return false;
        }
        let mut reached = mask & mask.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & mask & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == mask
    }

    /// Minimum degree inside the subgraph induced by `mask`.
    pub(crate) fn min_degree_within(&self, mask: Mask) -> u32 {
        iter_bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones())
            .min()
            .unwrap_or(0)
    }

    /// Vertices surviving repeated deletion of vertices with fewer than
    /// `d` neighbors (the `d`-core).
    pub(crate) fn core(&self, d: u32) -> Mask {
        let mut mask = self.full();
        loop {
            let weak = iter_bits(mask).fold(0, |acc, v| {
                if (self.adj[v] & mask).count_ones() < d {
                    acc | (1 << v)
                } else {
                    acc
                }
            });
            if weak == 0 {
                return mask;
            }
            mask &= !weak;
        }
    }

    /// `(k+1)`-connectivity of the induced subgraph on `mask`: at least `k+2`
    /// vertices and no `k`-subset whose removal disconnects it.
    pub(crate) fn is_k1_connected(&self, mask: Mask, k: usize) -> bool {
        let size = mask.count_ones() as usize;
        if size < k + 2 || (self.min_degree_within(mask) as usize) < k + 1 {
            return false;
        }
        let members: Vec<usize> = iter_bits(mask).collect();
        let mut disconnected = false;
        for_each_combination(members.len(), k, |idx| {
            let removed = idx.iter().fold(0, |m, &i| m | (1 << members[i]));
            if !self.is_connected(mask & !removed) {
                disconnected = true;
                return false;
            }
            true
        });
        !disconnected
    }
}

pub(crate) fn iter_bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Calls `f` on every `size`-subset of `0..n` (as sorted index slices) in
/// lexicographic order until `f` returns `false`. Returns whether the
/// enumeration ran to completion.
pub(crate) fn for_each_combination<F>(n: usize, size: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if size > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
