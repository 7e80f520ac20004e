//! Edge-disjoint spanning trees by matroid partition (k copies of the graphic
//! matroid), and the pipelines that combine it with the k-partite improver.
//!
//! Edges are inserted in id order. Each insertion runs a BFS over the exchange
//! graph: from an edge `x` and a forest `F_i` not holding it, either `F_i + x` is
//! acyclic (augment) or the tree path of `F_i` between the ends of `x` lists the
//! edges `x` could displace. When the BFS from the rejected edges dies out, the
//! edges it reached are spanned by every forest, and the components they form give
//! a partition with fewer than `k(c - 1)` crossing edges.

use std::collections::VecDeque;

use serde::Serialize;

use crate::connectivity::global_lambda;
use crate::cut_improver::spanning_kpartite_ec;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_order, Graph, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePacking {
    /// Edge ids of each tree, sorted.
    pub trees: Vec<Vec<usize>>,
}

/// Rooted view of one forest, rebuilt before each insertion.
struct Rooted {
    root: Vec<usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<usize>,
}

impl Rooted {
    fn build(n: usize, adj: &[Vec<(usize, usize)>]) -> Self {
        let mut r = Rooted {
            root: vec![usize::MAX; n],
            parent: vec![usize::MAX; n],
            parent_edge: vec![usize::MAX; n],
            depth: vec![0; n],
        };
        for s in 0..n {
            if r.root[s] != usize::MAX {
                continue;
            }
            r.root[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &adj[u] {
                    if r.root[w] == usize::MAX {
                        r.root[w] = s;
                        r.parent[w] = u;
                        r.parent_edge[w] = e;
                        r.depth[w] = r.depth[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        r
    }

    /// Edge ids on the tree path between `u` and `v`, which must share a tree.
    fn path(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut edges = Vec::new();
        while self.depth[u] > self.depth[v] {
            edges.push(self.parent_edge[u]);
            u = self.parent[u];
        }
        while self.depth[v] > self.depth[u] {
            edges.push(self.parent_edge[v]);
            v = self.parent[v];
        }
        while u != v {
            edges.push(self.parent_edge[u]);
            edges.push(self.parent_edge[v]);
            u = self.parent[u];
            v = self.parent[v];
        }
        edges
    }
}

struct Packer<'g> {
    g: &'g Graph,
    forest_of: Vec<Option<usize>>,
    adj: Vec<Vec<Vec<(usize, usize)>>>,
}

enum Search {
    /// Chain of `(edge, forest it enters)`, last entry first.
    Augment(Vec<(usize, usize)>),
    Stuck(Vec<bool>),
}

impl<'g> Packer<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        Packer {
            g,
            forest_of: vec![None; g.edge_count()],
            adj: vec![vec![Vec::new(); g.vertex_count()]; k],
        }
    }

    fn search(&self, starts: &[usize]) -> Search {
        let n = self.g.vertex_count();
        let rooted: Vec<Rooted> = self.adj.iter().map(|a| Rooted::build(n, a)).collect();
        let m = self.g.edge_count();
        let mut label: Vec<Option<(usize, usize)>> = vec![None; m];
        let mut reached = vec![false; m];
        let mut queue = VecDeque::new();
        for &e in starts {
            reached[e] = true;
            queue.push_back(e);
        }
        while let Some(x) = queue.pop_front() {
            let (u, v) = self.g.edge(x);
            for (i, r) in rooted.iter().enumerate() {
                if self.forest_of[x] == Some(i) {
                    continue;
                }
                if r.root[u] != r.root[v] {
                    let mut chain = vec![(x, i)];
                    let mut cur = x;
                    while let Some((prev, forest)) = label[cur] {
                        chain.push((prev, forest));
                        cur = prev;
                    }
                    return Search::Augment(chain);
                }
                let mut path = r.path(u, v);
                path.sort_unstable();
                for y in path {
                    if !reached[y] {
                        reached[y] = true;
                        label[y] = Some((x, i));
                        queue.push_back(y);
                    }
                }
            }
        }
        Search::Stuck(reached)
    }

    fn move_edge(&mut self, e: usize, to: usize) {
        let (u, v) = self.g.edge(e);
        if let Some(from) = self.forest_of[e] {
            self.adj[from][u].retain(|&(_, f)| f != e);
            self.adj[from][v].retain(|&(_, f)| f != e);
        }
        self.adj[to][u].push((v, e));
        self.adj[to][v].push((u, e));
        self.forest_of[e] = Some(to);
    }

    fn insert(&mut self, e: usize) -> bool {
        match self.search(&[e]) {
            Search::Augment(chain) => {
                // Each edge leaves its forest for the next one down the chain; process
                // from the free end so forests stay acyclic at every step.
                for (edge, forest) in chain {
                    self.move_edge(edge, forest);
                }
                true
            }
            Search::Stuck(_) => false,
        }
    }
}

/// `k` edge-disjoint spanning trees, or a partition certifying there are none.
pub fn tree_pack(g: &Graph, k: usize) -> Result<TreePacking> {
    if k == 0 {
        return Err(Error::BadParameters("k must be positive".into()));
    }
    let n = g.vertex_count();
    let goal = k * n.saturating_sub(1);
    let mut packer = Packer::new(g, k);
    let mut placed = 0;
    let mut rejected = Vec::new();
    for e in 0..g.edge_count() {
        if placed == goal {
            break;
        }
        if packer.insert(e) {
            placed += 1;
        } else {
            rejected.push(e);
        }
    }
    if placed == goal {
        let mut trees = vec![Vec::new(); k];
        for (e, f) in packer.forest_of.iter().enumerate() {
            if let Some(i) = f {
                trees[*i].push(e);
            }
        }
        return Ok(TreePacking { trees });
    }
    let reached = match packer.search(&rejected) {
        Search::Stuck(reached) => reached,
        Search::Augment(_) => {
            return Err(Error::InternalInvariantViolation(
                "rejected edge became insertable".into(),
            ))
        }
    };
    let spanned: Vec<usize> = (0..g.edge_count()).filter(|&e| reached[e]).collect();
    let comps = g.edge_subgraph(&spanned).components();
    let witness = Partition::from_parts(n, &comps)?;
    let crossing = g.crossing_edge_ids(&witness)?.len();
    if crossing >= k * (comps.len() - 1) {
        return Err(Error::InternalInvariantViolation(format!(
            "packing failed but witness has {crossing} crossing edges over {} parts",
            comps.len()
        )));
    }
    Err(Error::NoPacking {
        k,
        witness,
        crossing,
    })
}

/// Independent check: `k` disjoint edge sets, each a spanning tree of `g`.
pub fn validate_packing(g: &Graph, packing: &TreePacking, k: usize) -> bool {
    let n = g.vertex_count();
    if packing.trees.len() != k {
        return false;
    }
    let mut used = vec![false; g.edge_count()];
    for tree in &packing.trees {
        if tree.len() != n.saturating_sub(1) {
            return false;
        }
        let mut dsu: Vec<usize> = (0..n).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for &e in tree {
            if e >= used.len() || used[e] {
                return false;
            }
            used[e] = true;
            let (u, v) = g.edge(e);
            let (a, b) = (find(&mut dsu, u), find(&mut dsu, v));
            if a == b {
                return false;
            }
            dsu[a] = b;
        }
    }
    true
}

/// The partition a failed packing certifies: fewer than `k(s-1)` edges between its `s` parts.
pub fn validate_no_packing(g: &Graph, k: usize, witness: &Partition) -> bool {
    let s = witness.nonempty_part_count();
    match g.crossing_edge_ids(witness) {
        Ok(ids) => ids.len() < k * (s - 1),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitePacking {
    pub partition: Partition,
    /// Trees as edge ids of the input graph.
    pub packing: TreePacking,
    pub lambda_h: usize,
}

fn partite_packing(g: &Graph, parts: usize, k: usize, seed: u64) -> Result<PartitePacking> {
    let out = spanning_kpartite_ec(g, parts, seed)?;
    let ids = g.crossing_edge_ids(&out.partition)?;
    let packing = tree_pack(&out.subgraph, k)?;
    let trees = packing
        .trees
        .into_iter()
        .map(|t| {
            let mut t: Vec<usize> = t.into_iter().map(|e| ids[e]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    Ok(PartitePacking {
        partition: out.partition,
        packing: TreePacking { trees },
        lambda_h: out.lambda_h,
    })
}

/// Spanning bipartite 2T-subgraph when `lambda(g) >= 7`; `force` skips the check.
pub fn bipartite_2t(g: &Graph, force: bool, seed: u64) -> Result<PartitePacking> {
    if !force {
        let lambda = global_lambda(g)?.0;
        if lambda < 7 {
            return Err(Error::PreconditionFailed(format!(
                "edge-connectivity {lambda} is below 7"
            )));
        }
    }
    partite_packing(g, 2, 2, seed)
}

/// Spanning (k+1)-partite kT-subgraph when `lambda(g) >= 2k+1`.
pub fn kpartite_kt(g: &Graph, k: usize, force: bool, seed: u64) -> Result<PartitePacking> {
    if k == 0 {
        return Err(Error::BadParameters("k must be positive".into()));
    }
    if !force {
        let lambda = global_lambda(g)?.0;
        if lambda < 2 * k + 1 {
            return Err(Error::PreconditionFailed(format!(
                "edge-connectivity {lambda} is below {}",
                2 * k + 1
            )));
        }
    }
    partite_packing(g, k + 1, k, seed)
}

/// The union of the trees of a 2T packing peels with degree at most 3.
pub fn is_three_degenerate(g: &Graph, packing: &TreePacking) -> bool {
    let ids: Vec<usize> = packing.trees.concat();
    degeneracy_order(&g.edge_subgraph(&ids), 3).is_some()
}
