//! Edge- and arc-connectivity by max-flow, with minimum-cut witnesses, plus strong
//! components and vertex k-strongness.
//!
//! `essential_lambda` runs one flow per unordered pair of vertex-disjoint edges, so it
//! is O(m^2) flows; that is intended for graphs with a few hundred edges at most.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Digraph, Graph};

/// A vertex set `X` together with the edges (arcs) leaving it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    pub side: Vec<usize>,
    pub value: usize,
    pub crossing: Vec<usize>,
}

impl CutWitness {
    pub fn from_mask<G: FlowGraph + ?Sized>(g: &G, mask: &[bool]) -> Self {
        let crossing = g.crossing(mask);
        CutWitness {
            side: (0..g.vertex_count()).filter(|&v| mask[v]).collect(),
            value: crossing.len(),
            crossing,
        }
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.side {
            m[v] = true;
        }
        m
    }
}

/// What the flow routines need from a graph or digraph. Link `i` becomes network
/// arc `2i` (and its reverse `2i + 1`).
pub trait FlowGraph {
    fn vertex_count(&self) -> usize;
    fn link_count(&self) -> usize;
    fn link(&self, id: usize) -> (usize, usize);
    fn is_directed(&self) -> bool;

    fn network(&self) -> FlowNetwork {
        let mut net = FlowNetwork::new(self.vertex_count());
        for id in 0..self.link_count() {
            let (u, v) = self.link(id);
            if self.is_directed() {
                net.add_arc(u, v, 1);
            } else {
                net.add_edge(u, v, 1);
            }
        }
        net
    }

    /// Links leaving `side`: edges with exactly one end in it, or arcs with tail in it.
    fn crossing(&self, side: &[bool]) -> Vec<usize> {
        (0..self.link_count())
            .filter(|&id| {
                let (u, v) = self.link(id);
                if self.is_directed() {
                    side[u] && !side[v]
                } else {
                    side[u] != side[v]
                }
            })
            .collect()
    }
}

impl FlowGraph for Graph {
    fn vertex_count(&self) -> usize {
        Graph::vertex_count(self)
    }
    fn link_count(&self) -> usize {
        self.edge_count()
    }
    fn link(&self, id: usize) -> (usize, usize) {
        self.edge(id)
    }
    fn is_directed(&self) -> bool {
        false
    }
}

impl FlowGraph for Digraph {
    fn vertex_count(&self) -> usize {
        Digraph::vertex_count(self)
    }
    fn link_count(&self) -> usize {
        self.arc_count()
    }
    fn link(&self, id: usize) -> (usize, usize) {
        self.arc(id)
    }
    fn is_directed(&self) -> bool {
        true
    }
}

/// `lambda(u, v)` with a minimum `u,v`-cut whose side contains `u`.
pub fn local_lambda<G: FlowGraph>(g: &G, u: usize, v: usize) -> Result<(usize, CutWitness)> {
    if u == v {
        return Err(Error::SameVertex);
    }
    let n = g.vertex_count();
    if u >= n || v >= n {
        return Err(Error::InvalidGraph(format!("vertex out of range 0..{n}")));
    }
    let mut net = g.network();
    let value = net.max_flow(u, v, u32::MAX) as usize;
    let w = CutWitness::from_mask(g, &net.residual_reachable(u));
    debug_assert_eq!(w.value, value);
    Ok((value, w))
}

/// Maximum family of link-disjoint `u -> v` walks, as lists of link ids.
pub fn disjoint_paths<G: FlowGraph>(g: &G, u: usize, v: usize) -> Result<Vec<Vec<usize>>> {
    if u == v {
        return Err(Error::SameVertex);
    }
    let mut net = g.network();
    net.max_flow(u, v, u32::MAX);
    Ok(net
        .decompose(u, v)
        .into_iter()
        .map(|walk| walk.into_iter().map(|e| e / 2).collect())
        .collect())
}

/// `lambda(g)` with a witness achieving it. Root is vertex 0; for digraphs both
/// `lambda(0, v)` and `lambda(v, 0)` are taken. The first minimum found wins ties.
pub fn global_lambda<G: FlowGraph>(g: &G) -> Result<(usize, CutWitness)> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let mut net = g.network();
    let mut best: Option<(usize, Vec<bool>)> = None;
    fn consider(net: &mut FlowNetwork, best: &mut Option<(usize, Vec<bool>)>, s: usize, t: usize) {
        let limit = best.as_ref().map_or(u32::MAX, |b| b.0 as u32);
        net.reset();
        let f = net.max_flow(s, t, limit) as usize;
        if best.as_ref().is_none_or(|b| f < b.0) {
            *best = Some((f, net.residual_reachable(s)));
        }
    }
    for v in 1..n {
        consider(&mut net, &mut best, 0, v);
        if g.is_directed() {
            consider(&mut net, &mut best, v, 0);
        }
        if best.as_ref().is_some_and(|b| b.0 == 0) {
            break;
        }
    }
    let (value, mask) = best.expect("at least one pair examined");
    let w = CutWitness::from_mask(g, &mask);
    debug_assert_eq!(w.value, value);
    Ok((value, w))
}

/// `lambda(g) >= k`, with every flow stopped at `k`.
pub fn lambda_at_least<G: FlowGraph>(g: &G, k: usize) -> bool {
    let n = g.vertex_count();
    if k == 0 || n < 2 {
        return true;
    }
    let mut net = g.network();
    let k32 = k as u32;
    for v in 1..n {
        net.reset();
        if (net.max_flow(0, v, k32) as usize) < k {
            return false;
        }
        if g.is_directed() {
            net.reset();
            if (net.max_flow(v, 0, k32) as usize) < k {
                return false;
            }
        }
    }
    true
}

/// Minimum of `d(X)` over `X` with at least two vertices on each side.
pub fn essential_lambda(g: &Graph) -> Result<(usize, CutWitness)> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::TooSmall(format!(
            "need at least 4 vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in g.edges() {
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
    }
    let mut best: Option<(usize, Vec<bool>)> = None;
    // Sides that are independent sets: the best such cut is some non-adjacent pair.
    for a in 0..n {
        for b in a + 1..n {
            if !adjacent[a * n + b] {
                let value = g.degree(a) + g.degree(b);
                if best.as_ref().is_none_or(|x| value < x.0) {
                    let mut mask = vec![false; n];
                    mask[a] = true;
                    mask[b] = true;
                    best = Some((value, mask));
                }
            }
        }
    }
    // Otherwise each side spans an edge; contract one edge per side to a terminal.
    let (source, sink) = (n, n + 1);
    let big = g.edge_count() as u32 + 1;
    let m = g.edge_count();
    for e in 0..m {
        let (a, b) = g.edge(e);
        for f in e + 1..m {
            let (c, d) = g.edge(f);
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let mut net = FlowNetwork::new(n + 2);
            for &(u, v) in g.edges() {
                net.add_edge(u, v, 1);
            }
            net.add_arc(source, a, big);
            net.add_arc(source, b, big);
            net.add_arc(c, sink, big);
            net.add_arc(d, sink, big);
            let limit = best.as_ref().map_or(u32::MAX, |x| x.0 as u32);
            let value = net.max_flow(source, sink, limit) as usize;
            if best.as_ref().is_none_or(|x| value < x.0) {
                let mut mask = net.residual_reachable(source);
                mask.truncate(n);
                best = Some((value, mask));
            }
        }
    }
    let (value, mask) = best.ok_or_else(|| Error::TooSmall("no non-trivial cut".into()))?;
    let w = CutWitness::from_mask(g, &mask);
    debug_assert_eq!(w.value, value);
    Ok((value, w))
}

/// Strong components, each sorted, listed in a topological order of the condensation.
pub fn strong_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    // Kosaraju with explicit stacks.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if let Some(&(w, _)) = d.out_arcs(u).get(*i) {
                *i += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut comps = Vec::new();
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &(w, _) in d.in_arcs(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
}

pub fn is_strong(d: &Digraph) -> bool {
    d.vertex_count() <= 1 || strong_components(d).len() == 1
}

/// Strong components with no arc leaving them.
pub fn terminal_components(d: &Digraph) -> Vec<Vec<usize>> {
    let comps = strong_components(d);
    let mut comp = vec![0; d.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    comps
        .iter()
        .enumerate()
        .filter(|&(i, c)| {
            c.iter()
                .all(|&v| d.out_arcs(v).iter().all(|&(w, _)| comp[w] == i))
        })
        .map(|(_, c)| c.clone())
        .collect()
}

/// `|V| >= k + 1` and `D - X` strong whenever `|X| < k`.
pub fn is_k_strong(d: &Digraph, k: usize) -> bool {
    let n = d.vertex_count();
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    // v_in = 2v, v_out = 2v + 1.
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1, 1);
    }
    let mut adjacent = vec![false; n * n];
    for &(u, v) in d.arcs() {
        if !adjacent[u * n + v] {
            adjacent[u * n + v] = true;
            net.add_arc(2 * u + 1, 2 * v, 1);
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u == v || adjacent[u * n + v] {
                continue;
            }
            net.reset();
            if (net.max_flow(2 * u + 1, 2 * v, k as u32) as usize) < k {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_power_digraph;

    #[test]
    fn small_local_values() {
        let c3 = Digraph::cycle(3).unwrap();
        assert_eq!(local_lambda(&c3, 0, 1).unwrap().0, 1);
        let k4 = Graph::complete(4);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    let (val, w) = local_lambda(&k4, u, v).unwrap();
                    assert_eq!(val, 3);
                    assert_eq!(w.value, 3);
                    assert!(w.side.contains(&u) && !w.side.contains(&v));
                }
            }
        }
        assert_eq!(local_lambda(&k4, 2, 2), Err(Error::SameVertex));
    }

    #[test]
    fn global_values() {
        assert_eq!(global_lambda(&Graph::cycle(7).unwrap()).unwrap().0, 2);
        let r5 = cycle_power_digraph(5, 2).unwrap();
        let (val, w) = global_lambda(&r5).unwrap();
        assert_eq!(val, 2);
        assert_eq!(w.crossing.len(), 2);
        assert!(matches!(
            global_lambda(&Graph::empty(1)),
            Err(Error::TooSmall(_))
        ));
        assert_eq!(global_lambda(&Graph::empty(3)).unwrap().0, 0);
    }

    #[test]
    fn essential_values() {
        assert_eq!(essential_lambda(&Graph::cycle(6).unwrap()).unwrap().0, 2);
        let (val, w) = essential_lambda(&Graph::complete(4)).unwrap();
        assert_eq!(val, 4);
        assert_eq!(w.side.len(), 2);
        assert_eq!(essential_lambda(&Graph::petersen()).unwrap().0, 4);
        let two = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(essential_lambda(&two), Err(Error::Disconnected));
    }

    #[test]
    fn star_separates_essential_from_plain() {
        let g = Graph::star(4);
        assert_eq!(global_lambda(&g).unwrap().0, 1);
        assert_eq!(essential_lambda(&g).unwrap().0, 2);
    }

    #[test]
    fn components() {
        let p = Digraph::path(3);
        assert_eq!(strong_components(&p), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(terminal_components(&p), vec![vec![2]]);
        let c3 = Digraph::cycle(3).unwrap();
        assert_eq!(terminal_components(&c3), vec![vec![0, 1, 2]]);
        // R_3 on 0..3 plus x = 3 with x -> 0.
        let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 0), (3, 0)]).unwrap();
        assert_eq!(terminal_components(&d), vec![vec![0, 1, 2]]);
        assert!(!is_strong(&d));
    }

    #[test]
    fn k_strongness() {
        let r5 = cycle_power_digraph(5, 2).unwrap();
        assert!(is_k_strong(&r5, 2));
        assert!(!is_k_strong(&r5, 3));
        assert!(!is_k_strong(&Digraph::cycle(6).unwrap(), 2));
        assert!(is_k_strong(&Digraph::cycle(6).unwrap(), 1));
        assert!(is_k_strong(&cycle_power_digraph(7, 3).unwrap(), 3));
    }
}
