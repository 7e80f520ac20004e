//! Seeded random generators used by the test battery and the CLI.
//!
//! Every generator takes the caller's RNG so a single seed fixes a whole run.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_strong;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Partition};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn add_sparse_edges<R: Rng>(
    n: usize,
    p: f64,
    have: &mut [bool],
    edges: &mut Vec<(usize, usize)>,
    rng: &mut R,
) {
    for u in 0..n {
        for v in u + 1..n {
            if !have[u * n + v] && rng.gen_bool(p) {
                have[u * n + v] = true;
                edges.push((u, v));
            }
        }
    }
}

/// Connected simple graph: a random spanning tree plus each other pair with probability `p`.
pub fn connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let order = permutation(n, rng);
    let mut have = vec![false; n * n];
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (order[i].min(order[j]), order[i].max(order[j]));
        have[u * n + v] = true;
        edges.push((u, v));
    }
    add_sparse_edges(n, p, &mut have, &mut edges, rng);
    Graph::new(n, edges).expect("valid endpoints")
}

/// Simple graph with edge-connectivity at least `k`: a randomly relabelled
/// `ceil(k/2)`-th power of a cycle plus random chords. Needs `n > 2 ceil(k/2)`.
pub fn k_edge_connected_graph<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let h = k.div_ceil(2).max(1);
    if n <= 2 * h {
        return Err(Error::PreconditionFailed(format!(
            "need n > {} for k = {k}",
            2 * h
        )));
    }
    let label = permutation(n, rng);
    let mut have = vec![false; n * n];
    let mut edges = Vec::new();
    for i in 0..n {
        for s in 1..=h {
            let (a, b) = (label[i], label[(i + s) % n]);
            let (u, v) = (a.min(b), a.max(b));
            if !have[u * n + v] {
                have[u * n + v] = true;
                edges.push((u, v));
            }
        }
    }
    add_sparse_edges(n, p, &mut have, &mut edges, rng);
    Graph::new(n, edges)
}

/// Random simple `d`-regular graph: a circulant mixed by `swaps` double-edge swaps.
pub fn regular_graph<R: Rng>(n: usize, d: usize, swaps: usize, rng: &mut R) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(Error::PreconditionFailed(format!(
            "no simple {d}-regular graph on {n} vertices"
        )));
    }
    let mut have = vec![false; n * n];
    let mut edges = Vec::new();
    let add = |u: usize, v: usize, have: &mut Vec<bool>, edges: &mut Vec<(usize, usize)>| {
        let (u, v) = (u.min(v), u.max(v));
        have[u * n + v] = true;
        have[v * n + u] = true;
        edges.push((u, v));
    };
    for i in 0..n {
        for s in 1..=d / 2 {
            add(i, (i + s) % n, &mut have, &mut edges);
        }
        if d % 2 == 1 && i < n / 2 {
            add(i, i + n / 2, &mut have, &mut edges);
        }
    }
    for _ in 0..swaps {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        let ((a, b), (c, e)) = (edges[i], edges[j]);
        let (c, e) = if rng.gen_bool(0.5) { (c, e) } else { (e, c) };
        // a-b, c-e  ->  a-c, b-e
        if i == j || a == c || b == e || a == e || b == c || have[a * n + c] || have[b * n + e] {
            continue;
        }
        for (u, v) in [(a, b), (c, e)] {
            have[u * n + v] = false;
            have[v * n + u] = false;
        }
        for (u, v) in [(a, c), (b, e)] {
            have[u * n + v] = true;
            have[v * n + u] = true;
        }
        edges[i] = (a.min(c), a.max(c));
        edges[j] = (b.min(e), b.max(e));
    }
    Graph::new(n, edges)
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).expect("valid endpoints")
}

/// A random hamiltonian dicycle plus each other ordered pair with probability `p`.
pub fn strong_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    k_arc_connected_digraph(n, 1, p, rng).expect("n >= 2")
}

/// Simple digraph with arc-connectivity at least `k`: a relabelled `k`-th
/// power of a dicycle plus random arcs. Needs `n > k`.
pub fn k_arc_connected_digraph<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<Digraph> {
    if n <= k || n < 2 {
        return Err(Error::PreconditionFailed(format!(
            "need n > {k} and n >= 2"
        )));
    }
    let label = permutation(n, rng);
    let mut have = vec![false; n * n];
    let mut arcs = Vec::new();
    for i in 0..n {
        for s in 1..=k {
            let (u, v) = (label[i], label[(i + s) % n]);
            if !have[u * n + v] {
                have[u * n + v] = true;
                arcs.push((u, v));
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u != v && !have[u * n + v] && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs)
}

/// Semicomplete digraph; each pair is a 2-cycle with probability `p_double`,
/// otherwise a single arc of uniform direction.
pub fn semicomplete<R: Rng>(n: usize, p_double: f64, rng: &mut R) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p_double) {
                arcs.push((u, v));
                arcs.push((v, u));
            } else if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Digraph::new(n, arcs).expect("valid endpoints")
}

/// Rejection-samples [`semicomplete`] until strong. `n >= 3`.
pub fn strong_semicomplete<R: Rng>(n: usize, p_double: f64, rng: &mut R) -> Digraph {
    loop {
        let d = semicomplete(n, p_double, rng);
        if is_strong(&d) {
            return d;
        }
    }
}

/// Every vertex gets `k` distinct random out-neighbours, then extra arcs with
/// probability `p`. Needs `n > k`.
pub fn min_out_degree_digraph<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Result<Digraph> {
    if n <= k {
        return Err(Error::PreconditionFailed(format!("need n > {k}")));
    }
    let mut arcs = Vec::new();
    for u in 0..n {
        let others: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        let mut chosen = vec![false; n];
        for &v in others.choose_multiple(rng, k) {
            chosen[v] = true;
        }
        for v in others {
            if chosen[v] || rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs)
}

/// `delta^+ >= k` digraph whose only terminal component is a relabelled
/// copy of the rotative `k`-regular tournament on `2k + 1` vertices.
/// Needs `n >= 2k + 1`.
pub fn with_regular_tournament_sink<R: Rng>(
    n: usize,
    k: usize,
    p: f64,
    rng: &mut R,
) -> Result<Digraph> {
    let m = 2 * k + 1;
    if n < m || k == 0 {
        return Err(Error::PreconditionFailed(format!(
            "need k >= 1 and n >= {m}"
        )));
    }
    let label = permutation(n, rng);
    let mut arcs = Vec::new();
    for i in 0..m {
        for s in 1..=k {
            arcs.push((label[i], label[(i + s) % m]));
        }
    }
    // The rest reaches the sink along a path so no other component is terminal.
    for i in m..n {
        let mut targets: Vec<usize> = (0..i).map(|j| label[j]).collect();
        targets.shuffle(rng);
        let forced = &targets[..k.min(targets.len())];
        for j in 0..n {
            let v = label[j];
            if v != label[i] && (forced.contains(&v) || rng.gen_bool(p)) {
                arcs.push((label[i], v));
            }
        }
    }
    Digraph::new(n, arcs)
}

/// Uniform labelling into at most `t` parts.
pub fn partition<R: Rng>(n: usize, t: usize, rng: &mut R) -> Partition {
    Partition::from_assignment((0..n).map(|_| rng.gen_range(0..t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{global_lambda, lambda_at_least, terminal_components};

    #[test]
    fn generators_meet_their_promises() {
        let mut r = rng(1);
        for n in [2, 5, 30] {
            assert!(connected_graph(n, 0.1, &mut r).is_connected());
            assert!(is_strong(&strong_digraph(n, 0.05, &mut r)));
        }
        let g = k_edge_connected_graph(20, 5, 0.05, &mut r).unwrap();
        assert!(g.is_simple() && lambda_at_least(&g, 5));
        let g = regular_graph(20, 7, 500, &mut r).unwrap();
        assert!(g.is_simple() && (0..20).all(|v| g.degree(v) == 7));
        let d = k_arc_connected_digraph(12, 3, 0.1, &mut r).unwrap();
        assert!(global_lambda(&d).unwrap().0 >= 3);
        let s = strong_semicomplete(6, 0.2, &mut r);
        assert!(s.is_semicomplete() && is_strong(&s));
        assert!(
            min_out_degree_digraph(8, 3, 0.0, &mut r)
                .unwrap()
                .min_out_degree()
                >= 3
        );
        let d = with_regular_tournament_sink(9, 2, 0.2, &mut r).unwrap();
        assert!(d.min_out_degree() >= 2);
        let t = terminal_components(&d);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].len(), 5);
    }

    #[test]
    fn same_seed_same_graph() {
        let a = connected_graph(15, 0.3, &mut rng(9));
        let b = connected_graph(15, 0.3, &mut rng(9));
        assert_eq!(a, b);
    }
}
