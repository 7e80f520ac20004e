//! Hamiltonian cycles in semicomplete digraphs and spanning strong bipartite
//! subdigraphs of strong tournaments and semicomplete digraphs.
//!
//! The bipartition routine follows the inductive argument for odd tournaments:
//! pick a removable vertex `z` of least semi-degree, look at the parity classes of
//! a hamiltonian cycle of `T - z`, and either finish directly, shrink the
//! tournament by two vertices, or (for regular tournaments) re-route the cycle
//! around the arcs that block the parity trick.

use crate::connectivity::{is_k_strong, is_strong};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Partition};

/// Labels `a..e` of the five-vertex exceptional digraphs are vertices `0..5`.
pub const T5_LABELS: [&str; 5] = ["a", "b", "c", "d", "e"];

const T5_ARCS: [(usize, usize); 10] = [
    (0, 1),
    (1, 2),
    (2, 0),
    (3, 4),
    (0, 3),
    (1, 3),
    (2, 3),
    (4, 0),
    (4, 1),
    (4, 2),
];

pub const EXCEPTIONAL_NAMES: [&str; 6] = ["C3", "C_{3,1}", "T5", "S_{5,1}", "S_{5,2}", "S_{5,3}"];

/// The semicomplete digraphs with no spanning strong bipartite subdigraph.
pub fn exceptional(name: &str) -> Result<Digraph> {
    let with = |extra: (usize, usize)| {
        let mut arcs = T5_ARCS.to_vec();
        arcs.push(extra);
        Digraph::new(5, arcs)
    };
    match name {
        "C3" => Digraph::cycle(3),
        // x, y, z = 0, 1, 2.
        "C_{3,1}" => Digraph::new(3, vec![(0, 1), (1, 2), (1, 0), (2, 0)]),
        "T5" => Digraph::new(5, T5_ARCS.to_vec()),
        "S_{5,1}" => with((4, 3)),
        "S_{5,2}" => with((1, 4)),
        "S_{5,3}" => with((3, 2)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Dense adjacency, multiplicities ignored.
#[derive(Clone, Debug)]
struct Adj {
    n: usize,
    m: Vec<bool>,
}

impl Adj {
    fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let mut m = vec![false; n * n];
        for &(u, v) in d.arcs() {
            m[u * n + v] = true;
        }
        Adj { n, m }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.m[u * self.n + v]
    }
}

fn is_simple(d: &Digraph) -> bool {
    let arcs = d.arc_multiset();
    arcs.windows(2).all(|w| w[0] != w[1])
}

fn permutations(n: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn rec(
        perm: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if perm.len() == used.len() {
            return visit(perm);
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                if rec(perm, used, visit) {
                    return true;
                }
                perm.pop();
                used[v] = false;
            }
        }
        false
    }
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut visit);
}

/// `map[v]` for every vertex `v` of `pattern` such that `u -> v` in `pattern` iff
/// `map[u] -> map[v]` in `host`. Brute force, for at most 6 vertices.
pub fn find_isomorphism(pattern: &Digraph, host: &Digraph) -> Option<Vec<usize>> {
    let n = pattern.vertex_count();
    if n != host.vertex_count() || n > 6 || pattern.arc_count() != host.arc_count() {
        return None;
    }
    if !is_simple(pattern) || !is_simple(host) {
        return None;
    }
    let degrees = |d: &Digraph| {
        let mut s: Vec<(usize, usize)> =
            (0..n).map(|v| (d.out_degree(v), d.in_degree(v))).collect();
        s.sort_unstable();
        s
    };
    if degrees(pattern) != degrees(host) {
        return None;
    }
    let (pa, ha) = (Adj::new(pattern), Adj::new(host));
    let mut found = None;
    permutations(n, |perm| {
        let ok = (0..n).all(|u| (0..n).all(|v| u == v || pa.has(u, v) == ha.has(perm[u], perm[v])));
        if ok {
            found = Some(perm.to_vec());
        }
        ok
    });
    found
}

/// Name of the exceptional digraph `d` is isomorphic to, if any.
pub fn is_exceptional(d: &Digraph) -> Option<&'static str> {
    if !matches!(d.vertex_count(), 3 | 5) {
        return None;
    }
    EXCEPTIONAL_NAMES.into_iter().find(|name| {
        let e = exceptional(name).expect("known name");
        find_isomorphism(&e, d).is_some()
    })
}

fn check_semicomplete_strong(d: &Digraph) -> Result<()> {
    if !d.is_semicomplete() {
        return Err(Error::NotSemicomplete);
    }
    if !is_strong(d) {
        return Err(Error::NotStrong);
    }
    Ok(())
}

/// Checks that `cycle` visits every vertex once along arcs of `d`.
pub fn is_hamiltonian_cycle(d: &Digraph, cycle: &[usize]) -> bool {
    let n = d.vertex_count();
    if cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    n == 1 || (0..n).all(|i| d.has_arc(cycle[i], cycle[(i + 1) % n]))
}

/// Hamiltonian cycle of a strong semicomplete digraph by insertion: a vertex with
/// an in- and an out-neighbour on the cycle slots in between some consecutive pair;
/// when none does, an arc from a vertex the cycle dominates to one dominating it
/// extends the cycle by two.
pub fn hamiltonian_cycle(d: &Digraph) -> Result<Vec<usize>> {
    check_semicomplete_strong(d)?;
    let n = d.vertex_count();
    if n <= 1 {
        return Ok((0..n).collect());
    }
    let adj = Adj::new(d);
    let mut cycle = crate::ear::shortest_cycle(d).ok_or(Error::NotStrong)?;
    let mut on = vec![false; n];
    for &v in &cycle {
        on[v] = true;
    }
    while cycle.len() < n {
        let len = cycle.len();
        let mut inserted = false;
        for x in (0..n).filter(|&x| !on[x]) {
            if let Some(i) =
                (0..len).find(|&i| adj.has(cycle[i], x) && adj.has(x, cycle[(i + 1) % len]))
            {
                cycle.insert(i + 1, x);
                on[x] = true;
                inserted = true;
                break;
            }
        }
        if inserted {
            continue;
        }
        // Every outside vertex is dominated by the cycle or dominates it.
        let dominated: Vec<usize> = (0..n)
            .filter(|&x| !on[x] && !cycle.iter().any(|&c| adj.has(x, c)))
            .collect();
        let (x, y) = dominated
            .iter()
            .find_map(|&x| {
                (0..n)
                    .find(|&y| {
                        !on[y] && y != x && adj.has(x, y) && !cycle.iter().any(|&c| adj.has(c, y))
                    })
                    .map(|y| (x, y))
            })
            .ok_or_else(|| {
                Error::InternalInvariantViolation("no arc to extend the cycle".into())
            })?;
        cycle.splice(1..1, [x, y]);
        on[x] = true;
        on[y] = true;
    }
    debug_assert!(is_hamiltonian_cycle(d, &cycle));
    Ok(cycle)
}

/// `z` with `T - z` strong, of least semi-degree; ties go to the smallest id.
pub fn removable_vertex(t: &Digraph) -> Result<usize> {
    let n = t.vertex_count();
    if n < 4 {
        return Err(Error::TooSmall(format!(
            "need at least 4 vertices, got {n}"
        )));
    }
    if !is_strong(t) {
        return Err(Error::NotStrong);
    }
    (0..n)
        .filter(|&z| is_strong(&t.remove_vertex(z)))
        .min_by_key(|&z| (t.semi_degree(z), z))
        .ok_or_else(|| {
            Error::InternalInvariantViolation("strong tournament with no removable vertex".into())
        })
}

/// Default number of path extensions allowed when searching for an avoiding cycle.
pub const DEFAULT_AVOID_BUDGET: u64 = 1_000_000;

/// Hamiltonian cycle using none of the `forbidden` arcs. Requires the digraph to be
/// `(|forbidden| + 1)`-strong, where such a cycle is known to exist in tournaments.
pub fn hamiltonian_cycle_avoiding(
    t: &Digraph,
    forbidden: &[(usize, usize)],
    budget: u64,
) -> Result<Vec<usize>> {
    check_semicomplete_strong(t)?;
    let r = forbidden.len() + 1;
    if !is_k_strong(t, r) {
        return Err(Error::PreconditionFailed(format!(
            "digraph is not {r}-strong, needed to avoid {} arcs",
            forbidden.len()
        )));
    }
    search_avoiding(t, forbidden, budget)
}

fn search_avoiding(t: &Digraph, forbidden: &[(usize, usize)], budget: u64) -> Result<Vec<usize>> {
    let n = t.vertex_count();
    let mut allowed = Adj::new(t);
    for &(u, v) in forbidden {
        if u < n && v < n {
            allowed.m[u * n + v] = false;
        }
    }
    if let Ok(c) = hamiltonian_cycle(t) {
        if (0..c.len()).all(|i| allowed.has(c[i], c[(i + 1) % c.len()])) {
            return Ok(c);
        }
    }
    if n <= 1 {
        return Ok((0..n).collect());
    }
    let mut path = vec![0];
    let mut on = vec![false; n];
    on[0] = true;
    let mut steps = 0u64;
    if extend(&allowed, &mut path, &mut on, &mut steps, budget) {
        Ok(path)
    } else if steps >= budget {
        Err(Error::BudgetExhausted { steps })
    } else {
        Err(Error::PreconditionFailed(
            "no hamiltonian cycle avoids the given arcs".into(),
        ))
    }
}

fn extend(adj: &Adj, path: &mut Vec<usize>, on: &mut [bool], steps: &mut u64, budget: u64) -> bool {
    let n = adj.n;
    let last = *path.last().expect("path is non-empty");
    if path.len() == n {
        return adj.has(last, path[0]);
    }
    if *steps >= budget {
        return false;
    }
    // Every unvisited vertex still needs a way in and a way out.
    for w in (0..n).filter(|&w| !on[w]) {
        let has_in = adj.has(last, w) || (0..n).any(|u| !on[u] && u != w && adj.has(u, w));
        let has_out = adj.has(w, path[0]) || (0..n).any(|u| !on[u] && u != w && adj.has(w, u));
        if !has_in || !has_out {
            return false;
        }
    }
    let onward = |w: usize| {
        (0..n)
            .filter(|&u| !on[u] && u != w && adj.has(w, u))
            .count()
    };
    let mut next: Vec<usize> = (0..n).filter(|&w| !on[w] && adj.has(last, w)).collect();
    next.sort_by_key(|&w| (onward(w), w));
    for w in next {
        *steps += 1;
        path.push(w);
        on[w] = true;
        if extend(adj, path, on, steps, budget) {
            return true;
        }
        on[w] = false;
        path.pop();
        if *steps >= budget {
            return false;
        }
    }
    false
}

fn crossing_is_strong(d: &Digraph, p: &Partition) -> bool {
    d.partite_subgraph(p)
        .map(|h| is_strong(&h))
        .unwrap_or(false)
}

fn bipartition(n: usize, first: &[usize]) -> Partition {
    let mut part_of = vec![1; n];
    for &v in first {
        part_of[v] = 0;
    }
    Partition::new(part_of, 2).expect("two parts")
}

/// `(V_i, V_{3-i} + z)` when `z` has an in- and an out-neighbour in some parity
/// class `V_i` of the cycle.
fn parity_split(adj: &Adj, cycle: &[usize], z: usize) -> Option<Partition> {
    for parity in 0..2 {
        let class: Vec<usize> = cycle.iter().skip(parity).step_by(2).copied().collect();
        let has_in = class.iter().any(|&v| adj.has(v, z));
        let has_out = class.iter().any(|&v| adj.has(z, v));
        if has_in && has_out {
            return Some(bipartition(adj.n, &class));
        }
    }
    None
}

/// Spanning strong bipartite tournament of a strong tournament other than C3, T5.
pub fn good_bipartition_tournament(t: &Digraph) -> Result<Partition> {
    if !t.is_tournament() {
        return Err(Error::NotTournament);
    }
    if !is_strong(t) {
        return Err(Error::NotStrong);
    }
    let p = good_bipartition(t, false)?;
    if !crossing_is_strong(t, &p) {
        return Err(Error::InternalInvariantViolation(
            "constructed bipartition is not good".into(),
        ));
    }
    Ok(p)
}

fn good_bipartition(t: &Digraph, reversed: bool) -> Result<Partition> {
    let n = t.vertex_count();
    if n == 1 {
        return Ok(bipartition(1, &[0]));
    }
    if n == 3 {
        return Err(Error::Exceptional("C3".into()));
    }
    if n.is_multiple_of(2) {
        let c = hamiltonian_cycle(t)?;
        let class: Vec<usize> = c.iter().step_by(2).copied().collect();
        return Ok(bipartition(n, &class));
    }
    if n == 5 && find_isomorphism(&exceptional("T5")?, t).is_some() {
        return Err(Error::Exceptional("T5".into()));
    }
    let adj = Adj::new(t);
    let z = removable_vertex(t)?;
    let rest: Vec<usize> = (0..n).filter(|&v| v != z).collect();
    let (tz, _) = t.induced(&rest);
    let mut c: Vec<usize> = hamiltonian_cycle(&tz)?
        .into_iter()
        .map(|v| rest[v])
        .collect();
    if let Some(p) = parity_split(&adj, &c, z) {
        return Ok(p);
    }
    // Now one parity class is exactly N^-(z); put it on the even positions.
    if !adj.has(c[0], z) {
        c.rotate_left(1);
    }
    let regular = (0..n).all(|v| t.in_degree(v) == t.out_degree(v));
    if regular {
        return regular_case(t, &adj, z, &rest, &tz, &c);
    }
    let v2_pos = (1..c.len())
        .step_by(2)
        .filter(|&j| t.in_degree(c[j]) != t.out_degree(c[j]))
        .min_by_key(|&j| c[j]);
    let Some(j) = v2_pos else {
        // All irregular vertices dominate z; the reverse tournament has them in
        // N^+(z) and the same good bipartitions.
        if reversed {
            return Err(Error::InternalInvariantViolation(
                "no irregular out-neighbour of z in either orientation".into(),
            ));
        }
        return good_bipartition(&t.reverse(), true);
    };
    c.rotate_left(j - 1);
    let (v2, v3) = (c[1], c[2]);
    let keep: Vec<usize> = (0..n).filter(|&v| v != v2 && v != v3).collect();
    if keep.iter().any(|&w| adj.has(v2, w)) || keep.iter().any(|&w| adj.has(w, v3)) {
        return Err(Error::InternalInvariantViolation(format!(
            "vertices {v2}, {v3} do not split off around z = {z}"
        )));
    }
    let (t2, _) = t.induced(&keep);
    match good_bipartition(&t2, false) {
        Ok(p) => {
            let mut first: Vec<usize> = keep
                .iter()
                .enumerate()
                .filter(|&(i, _)| p.part(i) == 0)
                .map(|(_, &v)| v)
                .collect();
            first.push(v2);
            Ok(bipartition(n, &first))
        }
        Err(Error::Exceptional(name)) if name == "T5" => {
            let phi = find_isomorphism(&exceptional("T5")?, &t2)
                .ok_or_else(|| Error::InternalInvariantViolation("T5 match vanished".into()))?;
            // {v2, b, c, e} | {v3, a, d}.
            let first = [v2, keep[phi[1]], keep[phi[2]], keep[phi[4]]];
            Ok(bipartition(n, &first))
        }
        Err(Error::Exceptional(name)) => Err(Error::InternalInvariantViolation(format!(
            "reduced tournament is {name}, so the input was T5"
        ))),
        Err(e) => Err(e),
    }
}

fn regular_case(
    t: &Digraph,
    adj: &Adj,
    z: usize,
    rest: &[usize],
    tz: &Digraph,
    c: &[usize],
) -> Result<Partition> {
    let n = t.vertex_count();
    let mut in_class2 = vec![false; n];
    for &v in c.iter().skip(1).step_by(2) {
        in_class2[v] = true;
    }
    let vi = c
        .iter()
        .step_by(2)
        .copied()
        .min_by_key(|&v| {
            (
                t.out_neighbours(v)
                    .iter()
                    .filter(|&&w| in_class2[w])
                    .count(),
                v,
            )
        })
        .expect("cycle is non-empty");
    let mut local = vec![usize::MAX; n];
    for (i, &v) in rest.iter().enumerate() {
        local[v] = i;
    }
    let forbidden: Vec<(usize, usize)> = t
        .out_neighbours(vi)
        .into_iter()
        .filter(|&w| in_class2[w])
        .map(|w| (local[vi], local[w]))
        .collect();
    let cstar: Vec<usize> = search_avoiding(tz, &forbidden, DEFAULT_AVOID_BUDGET)?
        .into_iter()
        .map(|v| rest[v])
        .collect();
    parity_split(adj, &cstar, z).ok_or_else(|| {
        Error::InternalInvariantViolation("re-routed cycle still satisfies the parity claim".into())
    })
}

/// Partitions of `{a..e}` (first side) that the case analysis for T5 plus 2-cycles
/// produces, before applying symmetries.
const T5_PATCHES: [&[usize]; 4] = [&[0, 4], &[0, 2, 3], &[2, 4], &[1, 3]];

/// Symmetries of T5 up to reversal: rotation of `abc` and the map
/// `a b c d e -> a c b e d`, which carries the reverse of T5 onto T5.
fn t5_symmetries() -> Vec<[usize; 5]> {
    let rho = [1, 2, 0, 3, 4];
    let sigma = [0, 2, 1, 4, 3];
    let compose =
        |f: &[usize; 5], g: &[usize; 5]| -> [usize; 5] { std::array::from_fn(|i| f[g[i]]) };
    let mut group = vec![[0, 1, 2, 3, 4]];
    let mut i = 0;
    while i < group.len() {
        for gen in [rho, sigma] {
            let h = compose(&gen, &group[i]);
            if !group.contains(&h) {
                group.push(h);
            }
        }
        i += 1;
    }
    group
}

/// Named digraphs that really have no good bipartition. S_{5,2} and S_{5,3}
/// are recognised by [`is_exceptional`] but both admit one.
pub const BIPARTITION_FREE: [&str; 4] = ["C3", "C_{3,1}", "T5", "S_{5,1}"];

/// Spanning strong semicomplete bipartite subdigraph of a strong semicomplete
/// digraph. Fails with `Exceptional` exactly on [`BIPARTITION_FREE`].
pub fn strong_bipartite_semicomplete(s: &Digraph) -> Result<Partition> {
    check_semicomplete_strong(s)?;
    if let Some(name) = is_exceptional(s) {
        if BIPARTITION_FREE.contains(&name) {
            return Err(Error::Exceptional(name.into()));
        }
        return small_bipartition(s).ok_or_else(|| {
            Error::InternalInvariantViolation(format!("{name} has no good bipartition"))
        });
    }
    let n = s.vertex_count();
    if n <= 2 {
        return Ok(bipartition(n, &[0]));
    }
    let c = hamiltonian_cycle(s)?;
    let mut on_cycle = vec![false; n * n];
    for i in 0..n {
        on_cycle[c[i] * n + c[(i + 1) % n]] = true;
    }
    // One arc per pair: the cycle arc if the pair holds one, else the smaller id.
    let mut chosen: Vec<Option<usize>> = vec![None; n * n];
    for (id, &(u, v)) in s.arcs().iter().enumerate() {
        let key = u.min(v) * n + u.max(v);
        let better = match chosen[key] {
            None => true,
            Some(prev) => {
                let (pu, pv) = s.arc(prev);
                !on_cycle[pu * n + pv] && on_cycle[u * n + v]
            }
        };
        if better {
            chosen[key] = Some(id);
        }
    }
    let mut ids: Vec<usize> = chosen.into_iter().flatten().collect();
    ids.sort_unstable();
    let t = s.arc_subgraph(&ids);
    let candidate = match good_bipartition_tournament(&t) {
        Ok(p) => vec![p],
        Err(Error::Exceptional(name)) if name == "C3" => {
            (0..3).map(|x| bipartition(3, &[x])).collect()
        }
        Err(Error::Exceptional(name)) if name == "T5" => {
            let phi = find_isomorphism(&exceptional("T5")?, &t)
                .ok_or_else(|| Error::InternalInvariantViolation("T5 match vanished".into()))?;
            let mut out = Vec::new();
            for g in t5_symmetries() {
                for patch in T5_PATCHES {
                    let first: Vec<usize> = patch.iter().map(|&l| phi[g[l]]).collect();
                    out.push(bipartition(5, &first));
                }
            }
            out
        }
        Err(e) => return Err(e),
    };
    candidate
        .into_iter()
        .find(|p| crossing_is_strong(s, p))
        .ok_or_else(|| Error::InternalInvariantViolation("no case of the analysis applied".into()))
}

// Vertex 0 stays on side 0.
fn small_bipartition(s: &Digraph) -> Option<Partition> {
    let n = s.vertex_count();
    (1u32..1 << (n - 1))
        .map(|mask| {
            let first: Vec<usize> = (0..n)
                .filter(|&v| v == 0 || mask >> (v - 1) & 1 == 0)
                .collect();
            bipartition(n, &first)
        })
        .find(|p| crossing_is_strong(s, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_power_digraph;

    fn from_bits(n: usize, mask: u32) -> Digraph {
        let mut arcs = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                arcs.push(if mask >> bit & 1 == 1 { (u, v) } else { (v, u) });
                bit += 1;
            }
        }
        Digraph::new(n, arcs).unwrap()
    }

    #[test]
    fn exceptional_shapes() {
        let t5 = exceptional("T5").unwrap();
        assert_eq!(t5.arc_count(), 10);
        assert!(t5.is_tournament());
        assert_eq!(t5.underlying_graph(), crate::graph::Graph::complete(5));
        assert_eq!(
            exceptional("C_{3,1}").unwrap().arcs(),
            &[(0, 1), (1, 2), (1, 0), (2, 0)]
        );
        assert!(exceptional("S_{5,1}").unwrap().has_arc(4, 3));
        assert_eq!(exceptional("T6"), Err(Error::UnknownName("T6".into())));
        for name in EXCEPTIONAL_NAMES {
            assert_eq!(is_exceptional(&exceptional(name).unwrap()), Some(name));
        }
        assert_eq!(is_exceptional(&cycle_power_digraph(5, 2).unwrap()), None);
    }

    #[test]
    fn isomorphism_under_relabelling() {
        let t5 = exceptional("T5").unwrap();
        let perm = [3, 0, 4, 1, 2];
        let relabelled = Digraph::new(
            5,
            t5.arcs().iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        )
        .unwrap();
        assert_eq!(is_exceptional(&relabelled), Some("T5"));
    }

    #[test]
    fn hamiltonian_cycles() {
        assert_eq!(
            hamiltonian_cycle(&Digraph::cycle(3).unwrap())
                .unwrap()
                .len(),
            3
        );
        let r5 = cycle_power_digraph(5, 2).unwrap();
        assert!(is_hamiltonian_cycle(&r5, &hamiltonian_cycle(&r5).unwrap()));
        let t5 = exceptional("T5").unwrap();
        assert!(is_hamiltonian_cycle(&t5, &hamiltonian_cycle(&t5).unwrap()));
        assert_eq!(
            hamiltonian_cycle(&Digraph::cycle(4).unwrap()),
            Err(Error::NotSemicomplete)
        );
        assert_eq!(
            hamiltonian_cycle(&Digraph::transitive_tournament(4)),
            Err(Error::NotStrong)
        );
        for mask in 0..1 << 15 {
            let t = from_bits(6, mask);
            if is_strong(&t) {
                assert!(is_hamiltonian_cycle(&t, &hamiltonian_cycle(&t).unwrap()));
            }
        }
    }

    #[test]
    fn removable_vertices() {
        // Removing d or e from T5 leaves a non-strong tournament; a, b, c remain.
        let t5 = exceptional("T5").unwrap();
        assert_eq!(removable_vertex(&t5).unwrap(), 0);
        for v in [3, 4] {
            assert!(!is_strong(&t5.remove_vertex(v)));
        }
        let r5 = cycle_power_digraph(5, 2).unwrap();
        assert_eq!(removable_vertex(&r5).unwrap(), 0);
        // The strong 4-tournament: removing z leaves a 3-cycle.
        for mask in 0..64 {
            let t = from_bits(4, mask);
            if is_strong(&t) {
                let z = removable_vertex(&t).unwrap();
                assert!(is_strong(&t.remove_vertex(z)));
            }
        }
    }

    #[test]
    fn avoiding_cycles() {
        let r5 = cycle_power_digraph(5, 2).unwrap();
        let c = hamiltonian_cycle_avoiding(&r5, &[(0, 1)], DEFAULT_AVOID_BUDGET).unwrap();
        assert!(is_hamiltonian_cycle(&r5, &c));
        assert!((0..5).all(|i| (c[i], c[(i + 1) % 5]) != (0, 1)));
        let c3 = Digraph::cycle(3).unwrap();
        assert_eq!(hamiltonian_cycle_avoiding(&c3, &[], 10).unwrap().len(), 3);
        let r7 = cycle_power_digraph(7, 3).unwrap();
        for arc in [(0, 1), (0, 3), (2, 4)] {
            let c = hamiltonian_cycle_avoiding(&r7, &[arc], DEFAULT_AVOID_BUDGET).unwrap();
            assert!((0..7).all(|i| (c[i], c[(i + 1) % 7]) != arc));
        }
        assert!(matches!(
            hamiltonian_cycle_avoiding(&r5, &[(0, 1), (1, 2)], 100),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn exceptions_are_reported() {
        assert_eq!(
            good_bipartition_tournament(&Digraph::cycle(3).unwrap()),
            Err(Error::Exceptional("C3".into()))
        );
        assert_eq!(
            good_bipartition_tournament(&exceptional("T5").unwrap()),
            Err(Error::Exceptional("T5".into()))
        );
        for name in EXCEPTIONAL_NAMES {
            let s = exceptional(name).unwrap();
            match strong_bipartite_semicomplete(&s) {
                Err(e) => {
                    assert!(BIPARTITION_FREE.contains(&name));
                    assert_eq!(e, Error::Exceptional(name.into()));
                }
                Ok(p) => {
                    assert!(!BIPARTITION_FREE.contains(&name));
                    assert!(crossing_is_strong(&s, &p));
                }
            }
        }
    }

    #[test]
    fn t5_with_a_two_cycle_on_the_triangle() {
        let mut arcs = T5_ARCS.to_vec();
        arcs.push((1, 0));
        let s = Digraph::new(5, arcs).unwrap();
        let p = strong_bipartite_semicomplete(&s).unwrap();
        assert!(crossing_is_strong(&s, &p));
        // The case analysis' own answer also works.
        assert!(crossing_is_strong(&s, &bipartition(5, &[0, 4])));
    }

    #[test]
    fn symmetry_group_has_six_elements() {
        assert_eq!(t5_symmetries().len(), 6);
    }

    #[test]
    fn all_strong_tournaments_on_five_and_seven_vertices() {
        let t5 = exceptional("T5").unwrap();
        for mask in 0..1 << 10 {
            let t = from_bits(5, mask);
            if !is_strong(&t) {
                continue;
            }
            match good_bipartition_tournament(&t) {
                Ok(p) => assert!(crossing_is_strong(&t, &p)),
                Err(e) => {
                    assert_eq!(e, Error::Exceptional("T5".into()));
                    assert!(find_isomorphism(&t5, &t).is_some());
                }
            }
        }
        for mask in (0..1u32 << 21).step_by(97) {
            let t = from_bits(7, mask);
            if is_strong(&t) {
                let p = good_bipartition_tournament(&t).unwrap();
                assert!(crossing_is_strong(&t, &p));
            }
        }
    }

    #[test]
    fn all_strong_semicomplete_on_four_and_five_vertices() {
        // Each pair: forward, backward or both.
        for n in [4usize, 5] {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let total = 3usize.pow(pairs.len() as u32);
            for code in 0..total {
                let mut c = code;
                let mut arcs = Vec::new();
                for &(u, v) in &pairs {
                    match c % 3 {
                        0 => arcs.push((u, v)),
                        1 => arcs.push((v, u)),
                        _ => {
                            arcs.push((u, v));
                            arcs.push((v, u));
                        }
                    }
                    c /= 3;
                }
                let s = Digraph::new(n, arcs).unwrap();
                if !is_strong(&s) {
                    continue;
                }
                match strong_bipartite_semicomplete(&s) {
                    Ok(p) => assert!(crossing_is_strong(&s, &p)),
                    Err(Error::Exceptional(_)) => {
                        assert!(BIPARTITION_FREE.contains(&is_exceptional(&s).unwrap()))
                    }
                    Err(e) => panic!("unexpected {e:?} on {:?}", s.arcs()),
                }
            }
        }
    }
}
