//! Integer max-flow by Dinic's blocking-flow scheme. All capacities used here are
//! small integers, mostly 1, so the unit-capacity bounds apply.

use std::collections::VecDeque;

/// Residual network. Arc `e` and `e ^ 1` are each other's reverse.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    fn push_pair(&mut self, u: usize, v: usize, c_fwd: u32, c_rev: u32) -> usize {
        let id = self.to.len();
        self.adj[u].push(id);
        self.to.push(v);
        self.cap.push(c_fwd);
        self.orig.push(c_fwd);
        self.adj[v].push(id + 1);
        self.to.push(u);
        self.cap.push(c_rev);
        self.orig.push(c_rev);
        id
    }

    /// Directed arc `u -> v`; returns its id.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: u32) -> usize {
        self.push_pair(u, v, cap, 0)
    }

    /// Undirected edge usable once in either direction; returns the id of the `u -> v` half.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: u32) -> usize {
        self.push_pair(u, v, cap, cap)
    }

    /// Net flow pushed along arc `id` (negative when it runs against it).
    pub fn flow(&self, id: usize) -> i64 {
        i64::from(self.orig[id]) - i64::from(self.cap[id])
    }

    pub fn head(&self, id: usize) -> usize {
        self.to[id]
    }

    pub fn tail(&self, id: usize) -> usize {
        self.to[id ^ 1]
    }

    pub fn arc_count(&self) -> usize {
        self.to.len()
    }

    pub fn reset(&mut self) {
        self.cap.copy_from_slice(&self.orig);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] == u32::MAX {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.adj[u].len() {
            let e = self.adj[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, pushed.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until it is maximum or reaches `limit`.
    /// Calls accumulate; use [`FlowNetwork::reset`] to start over.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        assert_ne!(s, t, "source equals sink");
        let mut total = 0;
        while total < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, limit - total);
                if f == 0 {
                    break;
                }
                total += f;
                if total >= limit {
                    break;
                }
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network. After a maximum flow this is
    /// the source side of a minimum cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Splits the current flow into `s -> t` walks; each walk is a list of arc ids,
    /// and no arc carries more walks than its flow.
    pub fn decompose(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut remaining: Vec<i64> = (0..self.to.len()).map(|e| self.flow(e).max(0)).collect();
        let mut walks = Vec::new();
        loop {
            let mut walk = Vec::new();
            let mut u = s;
            while u != t {
                let Some(&e) = self.adj[u].iter().find(|&&e| remaining[e] > 0) else {
                    break;
                };
                remaining[e] -= 1;
                walk.push(e);
                u = self.to[e];
            }
            if u != t {
                return walks;
            }
            walks.push(walk);
        }
    }
}
