//! Unit-capacity cut network for hypergraphs and a Dinic max-flow over it.
//!
//! Each hyperedge becomes a pair of nodes joined by a capacity-1 arc;
//! every member vertex connects into the pair's entry and out of its exit
//! with unbounded capacity. A minimum s-t cut then counts hyperedges.

use std::collections::VecDeque;

use crate::hypergraph::Edge;

pub(crate) struct CutNetwork {
    vertices: usize,
    source: usize,
    sink: usize,
    inf: i64,
    to: Vec<usize>,
    cap: Vec<i64>,
    base: Vec<i64>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl CutNetwork {
    pub(crate) fn new(n: usize, edges: &[Edge]) -> Self {
        let m = edges.len();
        let nodes = n + 2 * m + 2;
        let mut net = CutNetwork {
            vertices: n,
            source: n + 2 * m,
            sink: n + 2 * m + 1,
            inf: m as i64 + 1,
            to: Vec::new(),
            cap: Vec::new(),
            base: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        };
        for (i, e) in edges.iter().enumerate() {
            let entry = n + 2 * i;
            let exit = entry + 1;
            net.add_arc(entry, exit, 1);
            for &v in e.iter() {
                net.add_arc(v, entry, net.inf);
                net.add_arc(exit, v, net.inf);
            }
        }
        net.base = net.cap.clone();
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.adj[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    fn pop_arc(&mut self) {
        let back = self.to.len() - 1;
        let from = self.to[back];
        let to = self.to[back - 1];
        self.adj[from].pop();
        self.adj[to].pop();
        self.to.truncate(back - 1);
        self.cap.truncate(back - 1);
    }

    /// Minimum number of hyperedges separating every vertex of `sources`
    /// from every vertex of `sinks`, capped at `limit`.
    ///
    /// When the returned value is below `limit` the cut is exact and the
    /// second component is the source side (residual reachability).
    pub(crate) fn min_cut(&mut self, sources: &[usize], sinks: &[usize], limit: usize) -> (usize, Option<Vec<bool>>) {
        self.cap.copy_from_slice(&self.base);
        let added = sources.len() + sinks.len();
        for &s in sources {
            self.add_arc(self.source, s, self.inf);
        }
        for &t in sinks {
            self.add_arc(t, self.sink, self.inf);
        }

        let limit = i64::try_from(limit).unwrap_or(i64::MAX);
        let mut flow = 0;
        while flow < limit && self.bfs() {
            self.iter.iter_mut().for_each(|x| *x = 0);
            loop {
                let pushed = self.dfs(self.source, limit - flow);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= limit {
                    break;
                }
            }
        }

        let side = if flow < limit {
            self.bfs();
            Some((0..self.vertices).map(|v| self.level[v] >= 0).collect())
        } else {
            None
        };
        for _ in 0..added {
            self.pop_arc();
        }
        (flow.min(limit) as usize, side)
    }

    fn bfs(&mut self) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[self.source] = 0;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[self.sink] >= 0
    }

    fn dfs(&mut self, u: usize, want: i64) -> i64 {
        if u == self.sink {
            return want;
        }
        while self.iter[u] < self.adj[u].len() {
            let a = self.adj[u][self.iter[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && self.level[v] == self.level[u] + 1 {
                let got = self.dfs(v, want.min(self.cap[a]));
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            self.iter[u] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    #[test]
    fn triangle_pairs() {
        let h = Hypergraph::complete(3, 2).unwrap();
        let mut net = CutNetwork::new(3, h.edges());
        let (v, side) = net.min_cut(&[0], &[2], usize::MAX);
        assert_eq!(v, 2);
        let side = side.unwrap();
        assert!(side[0] && !side[2]);
    }

    #[test]
    fn limit_stops_early() {
        let h = Hypergraph::complete(6, 3).unwrap();
        let mut net = CutNetwork::new(6, h.edges());
        assert_eq!(net.min_cut(&[0], &[5], usize::MAX).0, 10);
        let (v, side) = net.min_cut(&[0], &[5], 4);
        assert_eq!(v, 4);
        assert!(side.is_none());
        // network is reusable after a query
        assert_eq!(net.min_cut(&[0, 1], &[5], usize::MAX).0, 10);
    }

    #[test]
    fn one_hyperedge_is_one_unit() {
        let h = Hypergraph::build(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let mut net = CutNetwork::new(4, h.edges());
        assert_eq!(net.min_cut(&[0, 1], &[2, 3], usize::MAX).0, 1);
    }
}
