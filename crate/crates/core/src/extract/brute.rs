use crate::bitgraph::{iter_bits, BitGraph, Mask};
use crate::error::Result;
use crate::graph::{SimpleGraph, Vertex};
use crate::numeric::Interval;

use super::size_threshold;

pub const BRUTE_FORCE_HCS_LIMIT: usize = 18;

/// Exhaustive oracle: the lexicographically first vertex set with more than
/// `⌊(1+σ)k⌋` vertices that induces a `(k+1)`-connected subgraph.
pub fn brute_force_hcs(g: &SimpleGraph, k: usize, sigma: &Interval) -> Result<Option<Vec<Vertex>>> {
    let threshold = size_threshold(k, sigma)?;
    first_k1_connected_subset(g, k, threshold + 1, BRUTE_FORCE_HCS_LIMIT)
}

/// Lexicographically first vertex set of size at least `min_size` inducing
/// a `(k+1)`-connected subgraph, searched over subsets of the `(k+1)`-core.
pub(crate) fn first_k1_connected_subset(
    g: &SimpleGraph,
    k: usize,
    min_size: usize,
    limit: usize,
) -> Result<Option<Vec<Vertex>>> {
    let bg = BitGraph::new(g, limit)?;
    let min_size = min_size.max(k + 2);
    let core = bg.core((k + 1) as u32);
    let candidates: Vec<usize> = iter_bits(core).collect();
    if candidates.len() < min_size {
        return Ok(None);
    }
    let mut search = Search { bg: &bg, k, min_size, candidates: &candidates };
    Ok(search.descend(0, 0).map(|mask| iter_bits(mask).collect()))
}

struct Search<'a> {
    bg: &'a BitGraph,
    k: usize,
    min_size: usize,
    candidates: &'a [usize],
}

impl Search<'_> {
    /// Pre-order walk: a set is visited before its extensions, and
    /// extensions by smaller vertices come first, which is lexicographic
    /// order on sorted vertex sequences.
    fn descend(&mut self, mask: Mask, next: usize) -> Option<Mask> {
        let size = mask.count_ones() as usize;
        if size >= self.min_size && self.bg.is_k1_connected(mask, self.k) {
            return Some(mask);
        }
        for i in next..self.candidates.len() {
            if size + (self.candidates.len() - i) < self.min_size {
                break;
            }
            if let Some(hit) = self.descend(mask | (1 << self.candidates[i]), i + 1) {
                return Some(hit);
            }
        }
        None
    }
}
