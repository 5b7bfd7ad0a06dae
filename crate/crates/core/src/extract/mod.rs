//! Separation-based search for large `(k+1)`-connected induced subgraphs.
//!
//! Starting from the whole vertex set, every vertex set `W` with more than
//! `⌊(1+σ)k⌋` vertices is either split by a separation of `G[W]` with a core
//! of `k` vertices, in which case both sides are explored, or admits none,
//! in which case `G[W]` is `(k+1)`-connected and is returned. A
//! `(k+1)`-connected subgraph of `G[W]` cannot be split by `k` vertices, so
//! it always survives inside one side; exploring both sides therefore makes
//! a SEPARABLE verdict a proof that no such subgraph exists.

mod brute;
mod density;

use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::connectivity::{find_separation, is_k1_connected, Separation};
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, Vertex};
use crate::numeric::Interval;

pub use brute::{brute_force_hcs, BRUTE_FORCE_HCS_LIMIT};
pub(crate) use brute::first_k1_connected_subset;
pub use density::{check_density_implication, DensityOutcome, DensityReport};

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// `⌊(1+σ)k⌋`: a subgraph is large when it has more vertices than this.
pub fn size_threshold(k: usize, sigma: &Interval) -> Result<usize> {
    if k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    if !sigma.lo().is_positive() {
        return Err(Error::Parameter(format!("sigma must be positive, got {sigma}")));
    }
    let scaled = &(&Interval::one() + sigma) * &Interval::int(k as i64);
    scaled
        .floor()
        .and_then(|f| f.to_usize())
        .ok_or_else(|| Error::Undecidable(format!("floor((1+sigma)k) for sigma = {sigma}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NodeKind {
    /// Split by `separation` (in original vertex labels); the children are
    /// its two sides.
    Separated { separation: Separation },
    /// Induces a `(k+1)`-connected subgraph.
    LeafConnected,
    /// Too small to hold a large `(k+1)`-connected subgraph.
    LeafSmall,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub id: usize,
    pub vertices: Vec<Vertex>,
    #[serde(flatten)]
    pub kind: NodeKind,
    pub children: Vec<usize>,
}

/// Exploration record rooted at node 0. Identical vertex sets reached along
/// different branches share one node.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTree {
    pub nodes: Vec<TreeNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExtractionResult {
    /// `G[H]` is `(k+1)`-connected with more than `⌊(1+σ)k⌋` vertices.
    /// `tree` holds the part of the exploration done before the hit.
    Found {
        #[serde(rename = "H")]
        vertices: Vec<Vertex>,
        tree: DecompositionTree,
    },
    Separable { tree: DecompositionTree },
}

impl ExtractionResult {
    pub fn found(&self) -> Option<&[Vertex]> {
        match self {
            ExtractionResult::Found { vertices, .. } => Some(vertices),
            ExtractionResult::Separable { .. } => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.found().is_some()
    }

    pub fn tree(&self) -> &DecompositionTree {
        match self {
            ExtractionResult::Found { tree, .. } | ExtractionResult::Separable { tree } => tree,
        }
    }
}

/// Searches `G` for a `(k+1)`-connected induced subgraph on more than
/// `⌊(1+σ)k⌋` vertices with the default exploration budget.
pub fn extract(g: &SimpleGraph, k: usize, sigma: &Interval) -> Result<ExtractionResult> {
    extract_with_budget(g, k, sigma, DEFAULT_BUDGET)
}

pub fn extract_with_budget(
    g: &SimpleGraph,
    k: usize,
    sigma: &Interval,
    budget: usize,
) -> Result<ExtractionResult> {
    let threshold = size_threshold(k, sigma)?;
    let mut explorer = Explorer {
        g,
        k,
        small_limit: small_limit(k, threshold),
        budget,
        memo: HashMap::new(),
        tree: DecompositionTree::default(),
    };
    let root: Vec<Vertex> = (0..g.n()).collect();
    match explorer.explore(root)? {
        Step::Found(vertices) => {
            let sub = g.induced_subgraph(vertices.iter().copied())?;
            if vertices.len() <= threshold || !is_k1_connected(&sub.graph, k) {
                return Err(Error::Malformed(format!(
                    "extracted set {vertices:?} failed re-verification"
                )));
            }
            Ok(ExtractionResult::Found { vertices, tree: explorer.tree })
        }
        Step::Node(_) => Ok(ExtractionResult::Separable { tree: explorer.tree }),
    }
}

/// Vertex sets up to this size are leaves: they are not larger than
/// `⌊(1+σ)k⌋`, or have at most `k + 1` vertices and so can neither be
/// `(k+1)`-connected nor carry a separation.
pub fn small_limit(k: usize, threshold: usize) -> usize {
    threshold.max(k + 1)
}

enum Step {
    Found(Vec<Vertex>),
    Node(usize),
}

struct Explorer<'g> {
    g: &'g SimpleGraph,
    k: usize,
    small_limit: usize,
    budget: usize,
    memo: HashMap<Vec<Vertex>, usize>,
    tree: DecompositionTree,
}

impl Explorer<'_> {
    fn explore(&mut self, w: Vec<Vertex>) -> Result<Step> {
        if let Some(&id) = self.memo.get(&w) {
            return Ok(Step::Node(id));
        }
        if self.memo.len() >= self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let id = self.tree.nodes.len();
        self.memo.insert(w.clone(), id);
        self.tree.nodes.push(TreeNode {
            id,
            vertices: w.clone(),
            kind: NodeKind::LeafSmall,
            children: Vec::new(),
        });
        if w.len() <= self.small_limit {
            return Ok(Step::Node(id));
        }

        let sub = self.g.induced_subgraph(w.iter().copied())?;
        let Some(local) = find_separation(&sub.graph, self.k) else {
            self.tree.nodes[id].kind = NodeKind::LeafConnected;
            return Ok(Step::Found(w));
        };
        let separation = Separation {
            side_a: local.side_a.iter().map(|&v| sub.vertex_map[v]).collect(),
            side_b: local.side_b.iter().map(|&v| sub.vertex_map[v]).collect(),
            core: local.core.iter().map(|&v| sub.vertex_map[v]).collect(),
        };
        let mut sides = [
            separation.side_a.iter().copied().collect::<Vec<_>>(),
            separation.side_b.iter().copied().collect::<Vec<_>>(),
        ];
        self.tree.nodes[id].kind = NodeKind::Separated { separation };
        // larger side first: it is the likelier home of a dense subgraph
        if sides[1].len() > sides[0].len() {
            sides.swap(0, 1);
        }
        for side in sides {
            match self.explore(side)? {
                Step::Found(h) => return Ok(Step::Found(h)),
                Step::Node(child) => self.tree.nodes[id].children.push(child),
            }
        }
        Ok(Step::Node(id))
    }
}

impl DecompositionTree {
    pub fn root(&self) -> Option<&TreeNode> {
        self.nodes.first()
    }

    /// Verifies the structural invariants of a complete (SEPARABLE) tree:
    /// every separated node carries a valid separation of `G[W]` whose sides
    /// are its children, leaves are small or `(k+1)`-connected as labelled.
    pub fn check(&self, g: &SimpleGraph, k: usize, small_limit: usize) -> Result<(), String> {
        for node in &self.nodes {
            let w = &node.vertices;
            match &node.kind {
                NodeKind::LeafSmall => {
                    if w.len() > small_limit {
                        return Err(format!("node {} is a small leaf with {} vertices", node.id, w.len()));
                    }
                }
                NodeKind::LeafConnected => {
                    let sub = g.induced_subgraph(w.iter().copied()).map_err(|e| e.to_string())?;
                    if !is_k1_connected(&sub.graph, k) {
                        return Err(format!("node {} is not (k+1)-connected", node.id));
                    }
                }
                NodeKind::Separated { separation } => {
                    let sub = g.induced_subgraph(w.iter().copied()).map_err(|e| e.to_string())?;
                    let local_of = |v: &Vertex| sub.vertex_map.binary_search(v).ok();
                    let to_local = |set: &std::collections::BTreeSet<Vertex>| {
                        set.iter().map(local_of).collect::<Option<std::collections::BTreeSet<_>>>()
                    };
                    let local = match (
                        to_local(&separation.side_a),
                        to_local(&separation.side_b),
                        to_local(&separation.core),
                    ) {
                        (Some(side_a), Some(side_b), Some(core)) => Separation { side_a, side_b, core },
                        _ => return Err(format!("node {} separation leaves its vertex set", node.id)),
                    };
                    local.check(&sub.graph, k).map_err(|e| format!("node {}: {e}", node.id))?;
                    if node.children.len() != 2 {
                        return Err(format!("separated node {} has {} children", node.id, node.children.len()));
                    }
                    let mut child_sets: Vec<Vec<Vertex>> = node
                        .children
                        .iter()
                        .map(|&c| self.nodes.get(c).map(|n| n.vertices.clone()))
                        .collect::<Option<_>>()
                        .ok_or_else(|| format!("node {} has a dangling child", node.id))?;
                    let mut sides = vec![
                        separation.side_a.iter().copied().collect::<Vec<_>>(),
                        separation.side_b.iter().copied().collect::<Vec<_>>(),
                    ];
                    child_sets.sort();
                    sides.sort();
                    if child_sets != sides {
                        return Err(format!("children of node {} are not its separation sides", node.id));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sigma(s: &str) -> Interval {
        s.parse().unwrap()
    }

    #[test]
    fn threshold_rounding() {
        assert_eq!(size_threshold(2, &sigma("0.2")).unwrap(), 2);
        assert_eq!(size_threshold(2, &sigma("1")).unwrap(), 4);
        assert_eq!(size_threshold(5, &sigma("0.2")).unwrap(), 6);
        assert!(size_threshold(2, &sigma("0")).is_err());
        assert!(size_threshold(0, &sigma("1")).is_err());
    }

    #[test]
    fn complete_graph_is_found_whole() {
        let r = extract(&SimpleGraph::complete(7), 2, &sigma("0.2")).unwrap();
        assert_eq!(r.found(), Some(&[0, 1, 2, 3, 4, 5, 6][..]));
    }

    #[test]
    fn glued_k4_yields_one_copy() {
        let r = extract(&fixtures::glued_k4(), 2, &sigma("0.2")).unwrap();
        let h = r.found().unwrap();
        assert!(h == [0, 1, 2, 3] || h == [2, 3, 4, 5], "{h:?}");
    }

    #[test]
    fn diamond_is_separable_for_sigma_one() {
        let g = fixtures::diamond();
        let r = extract(&g, 2, &sigma("1")).unwrap();
        assert!(!r.is_found());
        assert_eq!(r.tree().nodes.len(), 1);
        r.tree().check(&g, 2, 4).unwrap();
    }

    #[test]
    fn cycle_tree_is_consistent() {
        let g = SimpleGraph::cycle(8);
        let r = extract(&g, 2, &sigma("0.2")).unwrap();
        assert!(!r.is_found());
        let tree = r.tree();
        assert!(matches!(tree.root().unwrap().kind, NodeKind::Separated { .. }));
        tree.check(&g, 2, small_limit(2, 2)).unwrap();
    }

    #[test]
    fn budget_is_enforced() {
        let err = extract_with_budget(&SimpleGraph::cycle(12), 2, &sigma("0.2"), 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 3 }));
    }

    #[test]
    fn json_shape() {
        let r = extract(&SimpleGraph::complete(4), 2, &sigma("0.2")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["outcome"], "FOUND");
        assert_eq!(v["H"], serde_json::json!([0, 1, 2, 3]));
        let r = extract(&SimpleGraph::cycle(5), 2, &sigma("0.2")).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["outcome"], "SEPARABLE");
        assert_eq!(v["tree"]["nodes"][0]["kind"], "SEPARATED");
    }
}
