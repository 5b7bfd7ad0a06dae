use crate::bitgraph::{for_each_combination, BitGraph};
use crate::error::Result;
use crate::graph::SimpleGraph;

use super::CutWitness;

pub const BRUTE_FORCE_CUT_LIMIT: usize = 14;

/// Exhaustive vertex connectivity: tries vertex subsets in increasing size
/// (lexicographic within a size) and returns the first whose removal leaves
/// a disconnected graph. Refuses graphs above [`BRUTE_FORCE_CUT_LIMIT`].
pub fn brute_force_min_cut(g: &SimpleGraph) -> Result<CutWitness> {
    let bg = BitGraph::new(g, BRUTE_FORCE_CUT_LIMIT)?;
    let n = bg.n();
    let full = bg.full();
    for size in 0..n.saturating_sub(1) {
        let mut found = None;
        for_each_combination(n, size, |idx| {
            let removed = idx.iter().fold(0u32, |m, &v| m | (1 << v));
            if !bg.is_connected(full & !removed) {
                found = Some(idx.to_vec());
                return false;
            }
            true
        });
        if let Some(separator) = found {
            return Ok(CutWitness { kappa: size, separator: Some(separator) });
        }
    }
    Ok(CutWitness { kappa: n.saturating_sub(1), separator: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn examples() {
        assert_eq!(brute_force_min_cut(&SimpleGraph::cycle(5)).unwrap().kappa, 2);
        assert_eq!(
            brute_force_min_cut(&SimpleGraph::star(3)).unwrap(),
            CutWitness { kappa: 1, separator: Some(vec![0]) }
        );
        let k4_minus = SimpleGraph::complete(4).without_edge(0, 1).unwrap();
        assert_eq!(
            brute_force_min_cut(&k4_minus).unwrap(),
            CutWitness { kappa: 2, separator: Some(vec![2, 3]) }
        );
        assert_eq!(
            brute_force_min_cut(&SimpleGraph::complete(6)).unwrap(),
            CutWitness { kappa: 5, separator: None }
        );
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(matches!(
            brute_force_min_cut(&SimpleGraph::cycle(15)),
            Err(Error::TooLarge { .. })
        ));
    }
}
