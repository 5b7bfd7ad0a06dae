//! Dinic max-flow on the vertex-split network of a simple graph.
//!
//! Every vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by an
//! arc of capacity 1; every undirected edge `{u, v}` becomes the arcs
//! `u_out -> v_in` and `v_out -> u_in` of unbounded capacity. The maximum
//! `s_out -> t_in` flow then counts internally vertex-disjoint `s`-`t` paths.

use std::collections::VecDeque;

use crate::graph::{SimpleGraph, Vertex};

const INF: u32 = u32::MAX / 2;

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: usize,
    cap: u32,
}

pub(crate) struct SplitNetwork {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

impl SplitNetwork {
    pub(crate) fn new(g: &SimpleGraph) -> Self {
        let nodes = 2 * g.n();
        let mut net = SplitNetwork {
            arcs: Vec::with_capacity(2 * (g.n() + 2 * g.edge_count())),
            head: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        };
        for v in 0..g.n() {
            net.push_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.push_arc(2 * u + 1, 2 * v, INF);
            net.push_arc(2 * v + 1, 2 * u, INF);
        }
        net
    }

    fn push_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.head[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.head[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn reset(&mut self, original: &[u32]) {
        for (arc, &cap) in self.arcs.iter_mut().zip(original) {
            arc.cap = cap;
        }
    }

    fn capacities(&self) -> Vec<u32> {
        self.arcs.iter().map(|a| a.cap).collect()
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let Arc { to, cap } = self.arcs[id];
                if cap > 0 && self.level[to] == u32::MAX {
                    self.level[to] = self.level[u] + 1;
                    queue.push_back(to);
                }
            }
        }
        self.level[sink] != u32::MAX
    }

    fn dfs(&mut self, u: usize, sink: usize, pushed: u32) -> u32 {
        if u == sink {
            return pushed;
        }
        while self.iter[u] < self.head[u].len() {
            let id = self.head[u][self.iter[u]];
            let Arc { to, cap } = self.arcs[id];
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let got = self.dfs(to, sink, pushed.min(cap));
                if got > 0 {
                    self.arcs[id].cap -= got;
                    self.arcs[id ^ 1].cap += got;
                    return got;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    /// Max flow from `source_out` to `sink_in`, stopping once `limit` units
    /// have been routed.
    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(source, sink) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let got = self.dfs(source, sink, limit - flow);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.head[u] {
                let Arc { to, cap } = self.arcs[id];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }
}

/// Local vertex connectivity between non-adjacent `s` and `t`.
pub(crate) struct LocalCut {
    pub size: usize,
    /// Present when `size < limit`: a minimum `s`-`t` vertex separator.
    pub separator: Option<Vec<Vertex>>,
}

/// Reusable solver for repeated local connectivity queries on one graph.
pub(crate) struct LocalConnectivity {
    net: SplitNetwork,
    pristine: Vec<u32>,
}

impl LocalConnectivity {
    pub(crate) fn new(g: &SimpleGraph) -> Self {
        let net = SplitNetwork::new(g);
        let pristine = net.capacities();
        LocalConnectivity { net, pristine }
    }

    /// Maximum number of internally disjoint `s`-`t` paths, capped at
    /// `limit`. When fewer than `limit` paths exist the minimum separator is
    /// read off the residual network.
    pub(crate) fn query(&mut self, s: Vertex, t: Vertex, limit: usize) -> LocalCut {
        self.net.reset(&self.pristine);
        let limit_u32 = limit.min(INF as usize) as u32;
        let flow = self.net.max_flow(2 * s + 1, 2 * t, limit_u32) as usize;
        if flow >= limit {
            return LocalCut { size: flow, separator: None };
        }
        let reach = self.net.residual_reachable(2 * s + 1);
        let separator: Vec<Vertex> = (0..self.net.head.len() / 2)
            .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
            .collect();
        debug_assert_eq!(separator.len(), flow);
        LocalCut { size: flow, separator: Some(separator) }
    }
}
