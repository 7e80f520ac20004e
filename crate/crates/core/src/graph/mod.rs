//! Finite multigraphs and multi-digraphs with dense integer vertex and edge ids,
//! vertex partitions, and the structural constructors every other module builds on.
//!
//! Vertices are `0..n`. Edge (arc) ids are positions in the edge (arc) list, so a
//! subgraph is renumbered densely; the `*_ids` helpers expose the original ids.

mod io;
mod partition;

pub use io::{AnyGraph, GraphFile};
pub use partition::Partition;

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Undirected multigraph without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {id} = ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {id} is a loop at {u}")));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges).expect("complete graph is valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameters(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path is valid")
    }

    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()).expect("star is valid")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, edges).expect("petersen is valid")
    }

    /// `C_m □ K_2`: outer rim `0..m`, inner rim `m..2m`, rungs `i - (m+i)`.
    pub fn prism(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::BadParameters(format!("prism needs m >= 3, got {m}")));
        }
        let mut edges = Vec::with_capacity(3 * m);
        for i in 0..m {
            edges.push((i, (i + 1) % m));
            edges.push((m + i, m + (i + 1) % m));
            edges.push((i, m + i));
        }
        Graph::new(2 * m, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbour, edge id)` pairs incident to `v`, in edge-id order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    /// `d_G(X, Y)` for disjoint vertex sets given as membership masks.
    pub fn edges_between(&self, x: &[bool], y: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| (x[u] && y[v]) || (x[v] && y[u]))
            .count()
    }

    /// `d_G(X)`.
    pub fn cut_value(&self, side: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| side[u] != side[v])
            .count()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Spanning subgraph on the given edge ids, kept in the order given.
    pub fn edge_subgraph(&self, ids: &[usize]) -> Graph {
        Graph::new(self.n, ids.iter().map(|&id| self.edges[id]).collect())
            .expect("subgraph of a valid graph is valid")
    }

    /// Ids of the edges whose ends lie in different parts of `p`.
    pub fn crossing_edge_ids(&self, p: &Partition) -> Result<Vec<usize>> {
        p.check_len(self.n)?;
        Ok((0..self.edges.len())
            .filter(|&id| {
                let (u, v) = self.edges[id];
                p.part(u) != p.part(v)
            })
            .collect())
    }

    /// `G[V_1, ..., V_k]`: the spanning subgraph of crossing edges. Relative edge order
    /// is preserved; [`Graph::crossing_edge_ids`] maps new ids back to ours.
    pub fn partite_subgraph(&self, p: &Partition) -> Result<Graph> {
        Ok(self.edge_subgraph(&self.crossing_edge_ids(p)?))
    }

    /// One vertex per edge; two vertices adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        if !self.is_simple() {
            return Err(Error::MultigraphUnsupported);
        }
        let mut edges = Vec::new();
        for v in 0..self.n {
            let inc = &self.adj[v];
            for (i, &(_, e)) in inc.iter().enumerate() {
                for &(_, f) in &inc[i + 1..] {
                    edges.push((e.min(f), e.max(f)));
                }
            }
        }
        Graph::new(self.edges.len(), edges)
    }

    /// Orders the edge list by `(min endpoint, max endpoint, id)`.
    pub fn canonical(&self) -> Graph {
        let mut ids: Vec<usize> = (0..self.edges.len()).collect();
        ids.sort_by_key(|&id| {
            let (u, v) = self.edges[id];
            (u.min(v), u.max(v), id)
        });
        Graph::new(
            self.n,
            ids.iter()
                .map(|&id| {
                    let (u, v) = self.edges[id];
                    (u.min(v), u.max(v))
                })
                .collect(),
        )
        .expect("reordering keeps validity")
    }
}

/// Directed multigraph without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (id, &(u, v)) in arcs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "arc {id} = ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("arc {id} is a loop at {u}")));
            }
            out[u].push((v, id));
            inc[v].push((u, id));
        }
        Ok(Digraph { n, arcs, out, inc })
    }

    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
        }
    }

    /// The directed cycle `0 -> 1 -> ... -> (n-1) -> 0`; `n >= 2`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParameters(format!(
                "directed cycle needs n >= 2, got {n}"
            )));
        }
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn path(n: usize) -> Self {
        Digraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("path is valid")
    }

    /// Both arcs between every pair of distinct vertices.
    pub fn complete_biorientation(n: usize) -> Self {
        let mut arcs = Vec::with_capacity(n * n.saturating_sub(1));
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::new(n, arcs).expect("biorientation is valid")
    }

    /// Transitive tournament: `i -> j` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                arcs.push((u, v));
            }
        }
        Digraph::new(n, arcs).expect("transitive tournament is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> (usize, usize) {
        self.arcs[id]
    }

    /// `(head, arc id)` pairs leaving `v`.
    pub fn out_arcs(&self, v: usize) -> &[(usize, usize)] {
        &self.out[v]
    }

    /// `(tail, arc id)` pairs entering `v`.
    pub fn in_arcs(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    /// `d^0(v) = min(d^+(v), d^-(v))`.
    pub fn semi_degree(&self, v: usize) -> usize {
        self.out_degree(v).min(self.in_degree(v))
    }

    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn min_semi_degree(&self) -> usize {
        (0..self.n).map(|v| self.semi_degree(v)).min().unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].iter().any(|&(w, _)| w == v)
    }

    pub fn arc_multiplicity(&self, u: usize, v: usize) -> usize {
        self.out[u].iter().filter(|&&(w, _)| w == v).count()
    }

    /// Distinct out-neighbours, sorted.
    pub fn out_neighbours(&self, v: usize) -> Vec<usize> {
        let mut ns: Vec<usize> = self.out[v].iter().map(|&(w, _)| w).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// Distinct in-neighbours, sorted.
    pub fn in_neighbours(&self, v: usize) -> Vec<usize> {
        let mut ns: Vec<usize> = self.inc[v].iter().map(|&(w, _)| w).collect();
        ns.sort_unstable();
        ns.dedup();
        ns
    }

    /// `d^+(X)`: arcs with tail in `X` and head outside.
    pub fn out_cut_value(&self, side: &[bool]) -> usize {
        self.arcs
            .iter()
            .filter(|&&(u, v)| side[u] && !side[v])
            .count()
    }

    /// Every pair of distinct vertices joined by at least one arc.
    pub fn is_semicomplete(&self) -> bool {
        let mut adj = vec![false; self.n * self.n];
        for &(u, v) in &self.arcs {
            adj[u * self.n + v] = true;
            adj[v * self.n + u] = true;
        }
        (0..self.n).all(|u| (u + 1..self.n).all(|v| adj[u * self.n + v]))
    }

    /// Semicomplete with exactly one arc per pair.
    pub fn is_tournament(&self) -> bool {
        self.arcs.len() == self.n * self.n.saturating_sub(1) / 2 && self.is_semicomplete()
    }

    pub fn reverse(&self) -> Digraph {
        Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (v, u)).collect())
            .expect("reversal keeps validity")
    }

    /// Spanning subdigraph on the given arc ids, kept in the order given.
    pub fn arc_subgraph(&self, ids: &[usize]) -> Digraph {
        Digraph::new(self.n, ids.iter().map(|&id| self.arcs[id]).collect())
            .expect("subdigraph of a valid digraph is valid")
    }

    /// `D<X>` relabelled to `0..|X|` in the order of `vertices`; returns the
    /// induced digraph and, for each of its arcs, the arc id in `self`.
    pub fn induced(&self, vertices: &[usize]) -> (Digraph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut arcs = Vec::new();
        let mut ids = Vec::new();
        for (id, &(u, v)) in self.arcs.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                arcs.push((index[u], index[v]));
                ids.push(id);
            }
        }
        (
            Digraph::new(vertices.len(), arcs).expect("induced subdigraph is valid"),
            ids,
        )
    }

    /// `D - v`, relabelled by skipping `v`.
    pub fn remove_vertex(&self, v: usize) -> Digraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep).0
    }

    pub fn crossing_arc_ids(&self, p: &Partition) -> Result<Vec<usize>> {
        p.check_len(self.n)?;
        Ok((0..self.arcs.len())
            .filter(|&id| {
                let (u, v) = self.arcs[id];
                p.part(u) != p.part(v)
            })
            .collect())
    }

    /// `D[V_1, ..., V_k]`; see [`Graph::partite_subgraph`].
    pub fn partite_subgraph(&self, p: &Partition) -> Result<Digraph> {
        Ok(self.arc_subgraph(&self.crossing_arc_ids(p)?))
    }

    /// `UG(D)`: one edge per adjacent unordered pair, ordered by `(min, max)`.
    pub fn underlying_graph(&self) -> Graph {
        let mut pairs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Graph::new(self.n, pairs).expect("underlying graph is valid")
    }

    /// Arcs ordered by `(tail, head, id)`.
    pub fn canonical(&self) -> Digraph {
        let mut arcs = self.arcs.clone();
        arcs.sort();
        Digraph::new(self.n, arcs).expect("reordering keeps validity")
    }

    /// Arc multiset as a sorted list, for multiset comparisons.
    pub fn arc_multiset(&self) -> Vec<(usize, usize)> {
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        arcs
    }
}

/// `r`-vertex `k`-th power of a cycle: vertex `i` joined to `i+1, ..., i+k (mod r)`.
pub fn power_of_cycle(r: usize, k: usize, directed: bool) -> Result<AnyGraph> {
    if directed {
        cycle_power_digraph(r, k).map(AnyGraph::Directed)
    } else {
        cycle_power_graph(r, k).map(AnyGraph::Undirected)
    }
}

fn check_cycle_power(r: usize, k: usize) -> Result<()> {
    if r < 3 || k == 0 || k >= r {
        return Err(Error::BadParameters(format!(
            "power of cycle needs r >= 3 and 1 <= k < r, got r={r}, k={k}"
        )));
    }
    Ok(())
}

pub fn cycle_power_digraph(r: usize, k: usize) -> Result<Digraph> {
    check_cycle_power(r, k)?;
    let arcs = (0..r)
        .flat_map(|i| (1..=k).map(move |j| (i, (i + j) % r)))
        .collect();
    Digraph::new(r, arcs)
}

/// Undirected version; pairs reached from both ends are kept once.
pub fn cycle_power_graph(r: usize, k: usize) -> Result<Graph> {
    check_cycle_power(r, k)?;
    let mut pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| (1..=k).map(move |j| (i, (i + j) % r)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    Graph::new(r, pairs)
}

/// A peeling order in which every vertex has at most `bound` neighbours among the
/// vertices peeled after it, if one exists. Parallel edges count once.
pub fn degeneracy_order(g: &Graph, bound: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ns: Vec<usize> = g.incident(v).iter().map(|&(w, _)| w).collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();
    let mut deg: Vec<usize> = neighbours.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))?;
        if deg[v] > bound {
            return None;
        }
        removed[v] = true;
        order.push(v);
        for &w in &neighbours[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    Some(order)
}

/// Greedy colouring along the reverse of a degeneracy order; uses at most
/// `degeneracy + 1` colours. Returns the colour of each vertex.
pub fn degeneracy_colouring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let order = degeneracy_order(g, usize::MAX).expect("unbounded peeling always succeeds");
    let mut colour = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let used: Vec<usize> = g
            .incident(v)
            .iter()
            .map(|&(w, _)| colour[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        colour[v] = (0..)
            .find(|c| !used.contains(c))
            .expect("colours are unbounded");
    }
    colour
}

/// Proper 2-colouring by BFS, if the graph is bipartite.
pub fn two_colouring(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut colour = vec![usize::MAX; n];
    for s in 0..n {
        if colour[s] != usize::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.incident(u) {
                if colour[w] == usize::MAX {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some(colour)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monochromatic_partition_drops_every_edge() {
        let k3 = Graph::complete(3);
        let h = k3.partite_subgraph(&Partition::trivial(3)).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 0);
    }

    #[test]
    fn alternating_partition_keeps_directed_four_cycle() {
        let c4 = Digraph::cycle(4).unwrap();
        let p = Partition::new(vec![0, 1, 0, 1], 2).unwrap();
        assert_eq!(c4.partite_subgraph(&p).unwrap(), c4);
    }

    #[test]
    fn k4_split_in_halves_keeps_four_edges() {
        let p = Partition::new(vec![0, 0, 1, 1], 2).unwrap();
        let h = Graph::complete(4).partite_subgraph(&p).unwrap();
        assert_eq!(h.edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn partition_size_must_match() {
        let p = Partition::new(vec![0, 1], 2).unwrap();
        assert_eq!(
            Graph::complete(3).partite_subgraph(&p),
            Err(Error::PartitionMismatch {
                partition: 2,
                graph: 3
            })
        );
    }

    #[test]
    fn underlying_graph_collapses_two_cycles() {
        let d = Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.underlying_graph().edges(), &[(0, 1)]);
        let c3 = Digraph::cycle(3).unwrap().underlying_graph();
        assert_eq!(c3, Graph::complete(3));
    }

    #[test]
    fn line_graphs_of_small_graphs() {
        assert_eq!(Graph::path(4).line_graph().unwrap(), Graph::path(3));
        let star = Graph::star(3).line_graph().unwrap();
        assert_eq!(star.edge_count(), 3);
        assert!((0..3).all(|v| star.degree(v) == 2));
        let multi = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(multi.line_graph(), Err(Error::MultigraphUnsupported));
    }

    #[test]
    fn line_graph_degrees_follow_endpoint_degrees() {
        let g = Graph::petersen();
        let l = g.line_graph().unwrap();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(l.degree(e), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn cycle_powers() {
        let c5 = cycle_power_digraph(5, 1).unwrap();
        assert_eq!(c5, Digraph::cycle(5).unwrap());
        let r5 = cycle_power_digraph(5, 2).unwrap();
        for v in 0..5 {
            assert_eq!(r5.out_neighbours(v), {
                let mut ns = vec![(v + 1) % 5, (v + 2) % 5];
                ns.sort();
                ns
            });
            assert_eq!(r5.in_degree(v), 2);
        }
        assert_eq!(cycle_power_graph(4, 3).unwrap(), Graph::complete(4));
        assert!(matches!(
            power_of_cycle(2, 1, true),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            power_of_cycle(5, 5, false),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn loops_are_rejected() {
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
        assert!(Digraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn wheel_like_graphs_are_three_degenerate() {
        let g = Graph::complete(4);
        assert!(degeneracy_order(&g, 3).is_some());
        assert!(degeneracy_order(&g, 2).is_none());
        let colour = degeneracy_colouring(&g);
        assert_eq!(colour.iter().max(), Some(&3));
    }

    #[test]
    fn semicomplete_and_tournament_tests() {
        assert!(Digraph::transitive_tournament(4).is_tournament());
        assert!(Digraph::complete_biorientation(3).is_semicomplete());
        assert!(!Digraph::complete_biorientation(3).is_tournament());
        assert!(!Digraph::cycle(4).unwrap().is_semicomplete());
    }
}
