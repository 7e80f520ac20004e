//! Extremal constructions, each checked on the way out, with refuters for the
//! negative results.

mod class_d;

pub use crate::tournament::{exceptional, EXCEPTIONAL_NAMES};
pub use class_d::{
    class_d, class_d_is_2k_strong, class_d_refuter, ClassDLayout, ClassDViolation, UBlock, WBlock,
};

use serde::Serialize;

use crate::connectivity::{essential_lambda, global_lambda};
use crate::error::{Error, Result};
use crate::graph::{cycle_power_digraph, Digraph, Graph, Partition};
use crate::tree_packing::tree_pack;

/// `R_{2k+1}`: vertex `i` dominates `i+1, ..., i+k` modulo `2k+1`.
pub fn rotative_tournament(k: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".into()));
    }
    cycle_power_digraph(2 * k + 1, k)
}

/// Id of `v_{i,j}` in `D_{k,r}`, for `i` in `1..=r` and `j` in `0..=2k`.
pub fn dkr_vertex(k: usize, i: usize, j: usize) -> usize {
    (i - 1) * (2 * k + 1) + j
}

/// `r` copies of `R_{2k+1}` whose vertices `v_{i,0}` carry the `k`-th power of an `r`-cycle.
pub fn dkr(k: usize, r: usize) -> Result<Digraph> {
    if k == 0 || r < k + 1 {
        return Err(Error::BadParameters(format!(
            "D_(k,r) needs k >= 1 and r >= k + 1, got k={k}, r={r}"
        )));
    }
    let m = 2 * k + 1;
    let mut arcs = Vec::new();
    for i in 1..=r {
        for j in 0..m {
            arcs.extend((1..=k).map(|l| (dkr_vertex(k, i, j), dkr_vertex(k, i, (j + l) % m))));
        }
    }
    for i in 0..r {
        arcs.extend((1..=k).map(|l| (dkr_vertex(k, i + 1, 0), dkr_vertex(k, (i + l) % r + 1, 0))));
    }
    let d = Digraph::new(r * m, arcs)?;
    let lambda = global_lambda(&d)?.0;
    if lambda != k {
        return Err(Error::InternalInvariantViolation(format!(
            "lambda(D_(k,r)) = {lambda}, expected {k}"
        )));
    }
    Ok(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DkrViolation {
    pub vertex: usize,
    pub out_across: usize,
    pub in_across: usize,
}

/// A vertex of the first copy with fewer than `k` out- or in-neighbours outside its
/// own part of `p`, so no spanning k-arc-connected subdigraph respects `p`.
pub fn dkr_refuter(k: usize, r: usize, p: &Partition) -> Result<DkrViolation> {
    let d = dkr(k, r)?;
    p.check_len(d.vertex_count())?;
    (0..2 * k + 1)
        .map(|j| dkr_vertex(k, 1, j))
        .find_map(|v| {
            let out_across = d
                .out_arcs(v)
                .iter()
                .filter(|&&(w, _)| p.part(w) != p.part(v))
                .count();
            let in_across = d
                .in_arcs(v)
                .iter()
                .filter(|&&(u, _)| p.part(u) != p.part(v))
                .count();
            (out_across < k || in_across < k).then_some(DkrViolation {
                vertex: v,
                out_across,
                in_across,
            })
        })
        .ok_or(Error::NoViolation)
}

/// The bipartite cubic prism `C_m □ K_2` (even `m`) colour class containing vertex 0.
fn prism_side(m: usize) -> Vec<usize> {
    let mut side: Vec<usize> = (0..m)
        .filter(|i| i % 2 == 0)
        .chain((0..m).filter(|i| i % 2 == 1).map(|i| m + i))
        .collect();
    side.sort_unstable();
    side
}

/// `(3,5)`-regular bipartite graph on `n` vertices with every non-trivial cut of
/// size at least 6. `H = C_{3n/8} □ K_2` occupies `0..3n/4`; the cubic graph `L`
/// (`K_4` for `n = 16`, `C_{n/8} □ K_2` otherwise) occupies the rest, and edge `e`
/// of `L` is subdivided by the `e`-th vertex of the side of `H` containing 0.
pub fn essentially_6ec_bipartite(n: usize) -> Result<Graph> {
    if n < 16 || !n.is_multiple_of(16) {
        return Err(Error::BadN(format!(
            "need n a positive multiple of 16, got {n}"
        )));
    }
    let m = 3 * n / 8;
    let h = Graph::prism(m)?;
    let l = if n == 16 {
        Graph::complete(4)
    } else {
        Graph::prism(n / 8)?
    };
    for (name, block) in [("H", &h), ("L", &l)] {
        let (ess, _) = essential_lambda(block)?;
        if ess < 4 {
            return Err(Error::BuildingBlockRejected(format!(
                "{name} is only essentially {ess}-edge-connected"
            )));
        }
    }
    let a = prism_side(m);
    debug_assert_eq!(a.len(), l.edge_count());
    let offset = h.vertex_count();
    let mut edges = h.edges().to_vec();
    for (e, &(x, y)) in l.edges().iter().enumerate() {
        edges.push((a[e], offset + x));
        edges.push((a[e], offset + y));
    }
    let g = Graph::new(n, edges)?;
    let in_a: Vec<bool> = (0..n).map(|v| a.binary_search(&v).is_ok()).collect();
    let bipartite_35 = g.edges().iter().all(|&(u, v)| in_a[u] != in_a[v])
        && (0..n).all(|v| g.degree(v) == if in_a[v] { 5 } else { 3 });
    if !bipartite_35 {
        return Err(Error::InternalInvariantViolation(
            "composition is not (3,5)-regular bipartite".into(),
        ));
    }
    let (ess, _) = essential_lambda(&g)?;
    if ess < 6 {
        return Err(Error::InternalInvariantViolation(format!(
            "composition is only essentially {ess}-edge-connected"
        )));
    }
    Ok(g)
}

/// A 6-edge-connected line graph together with the clique cover bounding its cuts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoBip2T {
    pub graph: Graph,
    /// One triangle per degree-3 vertex of the root graph.
    pub triangles: Vec<Vec<usize>>,
    /// One `K_5` per degree-5 vertex of the root graph.
    pub k5s: Vec<Vec<usize>>,
    /// `2b + 6c`, an upper bound on every cut.
    pub cut_bound: usize,
    /// `2|V| - 2`, the edges a spanning 2T-subgraph needs.
    pub needed: usize,
}

/// Line graph of [`essentially_6ec_bipartite`], which has no spanning bipartite 2T-subgraph.
pub fn no_bip2t_example(n: usize) -> Result<NoBip2T> {
    let root = essentially_6ec_bipartite(n)?;
    let graph = root.line_graph()?;
    let nv = graph.vertex_count();
    if (0..nv).any(|v| graph.degree(v) != 6) {
        return Err(Error::InternalInvariantViolation(
            "line graph is not 6-regular".into(),
        ));
    }
    let lambda = global_lambda(&graph)?.0;
    if lambda != 6 {
        return Err(Error::InternalInvariantViolation(format!(
            "line graph has lambda {lambda}"
        )));
    }
    let mut triangles = Vec::new();
    let mut k5s = Vec::new();
    for v in 0..root.vertex_count() {
        let clique: Vec<usize> = root.incident(v).iter().map(|&(_, e)| e).collect();
        match clique.len() {
            3 => triangles.push(clique),
            5 => k5s.push(clique),
            d => {
                return Err(Error::InternalInvariantViolation(format!(
                    "root vertex of degree {d}"
                )))
            }
        }
    }
    // The cliques partition the edges of the line graph.
    let clique_edges: usize = triangles
        .iter()
        .chain(&k5s)
        .map(|c| c.len() * (c.len() - 1) / 2)
        .sum();
    if clique_edges != graph.edge_count() {
        return Err(Error::InternalInvariantViolation(
            "cliques do not partition the edges".into(),
        ));
    }
    let cut_bound = 2 * triangles.len() + 6 * k5s.len();
    let needed = 2 * nv - 2;
    if cut_bound >= needed {
        return Err(Error::InternalInvariantViolation(format!(
            "cut bound {cut_bound} is not below {needed}"
        )));
    }
    Ok(NoBip2T {
        graph,
        triangles,
        k5s,
        cut_bound,
        needed,
    })
}

/// Wheel whose rim is an odd cycle of length `m >= 7`; the hub is vertex `m`.
pub fn odd_wheel(m: usize) -> Result<Graph> {
    if m < 7 || m.is_multiple_of(2) {
        return Err(Error::BadN(format!(
            "odd wheel needs an odd rim of length at least 7, got {m}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    edges.extend((0..m).map(|i| (i, m)));
    Graph::new(m + 1, edges)
}

/// Zig-zag decomposition of `K_{2r}` into `r` hamiltonian paths: path `i` visits
/// `i, i+1, i-1, i+2, i-2, ..., i+r` modulo `2r`.
pub fn walecki_paths(r: usize) -> Result<Vec<Vec<usize>>> {
    if r == 0 {
        return Err(Error::BadN("r must be at least 1".into()));
    }
    let n = 2 * r;
    let paths: Vec<Vec<usize>> = (0..r)
        .map(|i| {
            let mut p = vec![i];
            for step in 1..n {
                let half = step.div_ceil(2);
                let v = if step % 2 == 1 {
                    i + half
                } else {
                    i + n - half
                };
                p.push(v % n);
            }
            p
        })
        .collect();
    let mut used = vec![false; n * n];
    for p in &paths {
        for w in p.windows(2) {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            if used[a * n + b] {
                return Err(Error::InternalInvariantViolation(format!(
                    "edge {a}-{b} used twice"
                )));
            }
            used[a * n + b] = true;
        }
    }
    Ok(paths)
}

/// `host` joined to a disjoint `K_{2k}` by `k` edges from host vertex 0; the
/// result is a kT-graph containing `K_{2k}`, so its chromatic number is at least `2k`.
pub fn kt_chromatic_2k(k: usize, host: &Graph) -> Result<Graph> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".into()));
    }
    if host.vertex_count() == 0 || tree_pack(host, k).is_err() {
        return Err(Error::HostNotKT(k));
    }
    let n = host.vertex_count();
    let mut edges = host.edges().to_vec();
    for p in walecki_paths(k)? {
        edges.extend(p.windows(2).map(|w| (n + w[0], n + w[1])));
    }
    edges.extend((0..k).map(|i| (0, n + i)));
    let g = Graph::new(n + 2 * k, edges)?;
    tree_pack(&g, k)
        .map_err(|_| Error::InternalInvariantViolation("join is not a kT-graph".into()))?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{is_k_strong, lambda_at_least};
    use crate::graph::power_of_cycle;

    #[test]
    fn rotative_tournaments() {
        assert_eq!(rotative_tournament(1).unwrap(), Digraph::cycle(3).unwrap());
        let r5 = rotative_tournament(2).unwrap();
        assert!((0..5).all(|v| r5.out_degree(v) == 2 && r5.in_degree(v) == 2));
        assert!(is_k_strong(&rotative_tournament(3).unwrap(), 3));
    }

    #[test]
    fn dkr_shapes() {
        let d = dkr(2, 5).unwrap();
        assert_eq!(d.vertex_count(), 25);
        let d12 = dkr(1, 2).unwrap();
        assert_eq!(d12.vertex_count(), 6);
        assert!(d12.has_arc(0, 3) && d12.has_arc(3, 0));
        assert!(lambda_at_least(&dkr(3, 4).unwrap(), 3));
        assert!(matches!(dkr(2, 2), Err(Error::BadParameters(_))));
        // Hubs carry exactly the k-th power of the r-cycle.
        let hubs: Vec<usize> = (1..=5).map(|i| dkr_vertex(2, i, 0)).collect();
        let (sub, _) = d.induced(&hubs);
        assert_eq!(
            sub.arc_multiset(),
            power_of_cycle(5, 2, true)
                .unwrap()
                .into_digraph()
                .unwrap()
                .arc_multiset()
        );
    }

    #[test]
    fn dkr_refuter_cases() {
        let one = Partition::new(vec![0; 6], 2).unwrap();
        assert!(dkr_refuter(1, 2, &one).is_ok());
        let mut rainbow = vec![0; 6];
        rainbow[1] = 1;
        rainbow[2] = 2;
        let p = Partition::new(rainbow, 3).unwrap();
        assert_eq!(dkr_refuter(1, 2, &p), Err(Error::NoViolation));
    }

    #[test]
    fn exceptional_names() {
        assert_eq!(exceptional("T5").unwrap().arc_count(), 10);
        assert!(matches!(exceptional("X"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn sixteen_vertex_degree_profile() {
        let g = essentially_6ec_bipartite(16).unwrap();
        let mut degrees: Vec<usize> = (0..16).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [vec![3; 10], vec![5; 6]].concat());
        assert!(matches!(essentially_6ec_bipartite(24), Err(Error::BadN(_))));
    }

    #[test]
    fn no_bip2t_bounds() {
        let ex = no_bip2t_example(16).unwrap();
        assert_eq!(ex.graph.vertex_count(), 30);
        assert_eq!((ex.triangles.len(), ex.k5s.len()), (10, 6));
        assert_eq!((ex.cut_bound, ex.needed), (56, 58));
    }

    #[test]
    fn walecki_and_wheels() {
        for r in 1..6 {
            let paths = walecki_paths(r).unwrap();
            assert_eq!(paths.len(), r);
            let edges: usize = paths.iter().map(|p| p.len() - 1).sum();
            assert_eq!(edges, r * (2 * r - 1));
            assert!(paths.iter().all(|p| {
                let mut s = p.clone();
                s.sort_unstable();
                s == (0..2 * r).collect::<Vec<_>>()
            }));
        }
        let w = odd_wheel(7).unwrap();
        assert_eq!((w.vertex_count(), w.edge_count()), (8, 14));
        assert!(tree_pack(&w, 2).is_ok());
        assert!(odd_wheel(8).is_err());
        let g = kt_chromatic_2k(2, &w).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(
            kt_chromatic_2k(2, &Graph::cycle(5).unwrap()),
            Err(Error::HostNotKT(2))
        );
    }
}
