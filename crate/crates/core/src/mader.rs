//! Splitting off at a balanced vertex and the induction that yields spanning
//! k-arc-connected (2k+1)-partite subdigraphs.

use serde::Serialize;

use crate::connectivity::{global_lambda, lambda_at_least, FlowGraph};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Partition};

/// One splitting step: `vertex` was removed after its arcs were paired into
/// `pairs`, which became the arcs `created` of the reduced digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    pub vertex: usize,
    pub pairs: Vec<(usize, usize)>,
    pub created: Vec<usize>,
}

/// Records in the order they were made; the top of the stack is the deepest step.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SplitTrace {
    pub records: Vec<SplitRecord>,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".into()));
    }
    Ok(())
}

fn require_lambda(d: &Digraph, k: usize) -> Result<()> {
    if d.vertex_count() >= 2 && !lambda_at_least(d, k) {
        let actual = global_lambda(d)?.0;
        return Err(Error::TooWeak {
            required: k,
            actual,
        });
    }
    Ok(())
}

fn minimize_ids(d: &Digraph, k: usize) -> Vec<usize> {
    let mut keep = vec![true; d.arc_count()];
    for id in 0..d.arc_count() {
        keep[id] = false;
        let ids: Vec<usize> = (0..d.arc_count()).filter(|&i| keep[i]).collect();
        if !lambda_at_least(&d.arc_subgraph(&ids), k) {
            keep[id] = true;
        }
    }
    (0..d.arc_count()).filter(|&i| keep[i]).collect()
}

/// Deletes arcs in ascending id order whenever the arc-connectivity stays at least `k`.
pub fn minimize_arcs(d: &Digraph, k: usize) -> Result<Digraph> {
    check_k(k)?;
    require_lambda(d, k)?;
    Ok(d.arc_subgraph(&minimize_ids(d, k)))
}

/// Smallest vertex with in- and out-degree exactly `k`.
pub fn find_low_vertex(d: &Digraph, k: usize) -> Result<usize> {
    (0..d.vertex_count())
        .find(|&v| d.in_degree(v) == k && d.out_degree(v) == k)
        .ok_or(Error::NotFound(k))
}

/// `lambda(x, y) >= k` for all `x, y` other than `skip`, via a root.
fn connected_away_from(d: &Digraph, skip: usize, k: usize) -> bool {
    let n = d.vertex_count();
    let r = if skip == 0 { 1 } else { 0 };
    let mut net = d.network();
    let k32 = k as u32;
    for y in (0..n).filter(|&y| y != r && y != skip) {
        for (a, b) in [(r, y), (y, r)] {
            net.reset();
            if (net.max_flow(a, b, k32) as usize) < k {
                return false;
            }
        }
    }
    true
}

/// `d` with the paired arcs at `s` replaced by shortcuts, `s` kept.
fn with_pairs(d: &Digraph, pairs: &[(usize, usize)]) -> Digraph {
    let mut dropped = vec![false; d.arc_count()];
    let mut arcs = Vec::with_capacity(d.arc_count());
    for &(i, o) in pairs {
        dropped[i] = true;
        dropped[o] = true;
    }
    arcs.extend(
        (0..d.arc_count())
            .filter(|&id| !dropped[id])
            .map(|id| d.arc(id)),
    );
    arcs.extend(shortcuts(d, pairs));
    Digraph::new(d.vertex_count(), arcs).expect("shortcuts avoid loops")
}

/// Shortcut arcs of a pairing; a pair through a 2-cycle would be a loop and is dropped.
fn shortcuts<'a>(
    d: &'a Digraph,
    pairs: &'a [(usize, usize)],
) -> impl Iterator<Item = (usize, usize)> + 'a {
    pairs
        .iter()
        .map(|&(i, o)| (d.arc(i).0, d.arc(o).1))
        .filter(|&(u, v)| u != v)
}

fn pair_up(
    d: &Digraph,
    s: usize,
    k: usize,
    ins: &[usize],
    outs: &[usize],
    fast: bool,
    loops: bool,
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize)>,
) -> bool {
    if pairs.len() == ins.len() {
        return !fast || connected_away_from(&with_pairs(d, pairs), s, k);
    }
    let u = d.arc(ins[pairs.len()]).0;
    for j in 0..outs.len() {
        if used[j] || (!loops && d.arc(outs[j]).1 == u) {
            continue;
        }
        pairs.push((ins[pairs.len()], outs[j]));
        if fast || connected_away_from(&with_pairs(d, pairs), s, k) {
            used[j] = true;
            if pair_up(d, s, k, ins, outs, fast, loops, used, pairs) {
                return true;
            }
            used[j] = false;
        }
        pairs.pop();
    }
    false
}

/// Result of splitting off every arc at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// `d - s` plus the shortcut arcs, which come last. Vertices above `s` shift down by one.
    pub reduced: Digraph,
    /// `(in-arc id, out-arc id)` of `d` for every pair, in order. Pairs closing a
    /// loop have no shortcut in `reduced`.
    pub pairing: Vec<(usize, usize)>,
    /// Arc id in `d` of each non-shortcut arc of `reduced`.
    pub kept: Vec<usize>,
}

/// Completely splits off `s`, pairing in-arcs in id order with the first
/// admissible out-arc and backtracking when stuck. With `fast`, connectivity is
/// only checked once all arcs are paired.
pub fn split_off(d: &Digraph, s: usize, k: usize, fast: bool) -> Result<Split> {
    check_k(k)?;
    let n = d.vertex_count();
    if s >= n {
        return Err(Error::InvalidGraph(format!(
            "vertex {s} out of range 0..{n}"
        )));
    }
    let (in_degree, out_degree) = (d.in_degree(s), d.out_degree(s));
    if in_degree != out_degree {
        return Err(Error::Unbalanced {
            vertex: s,
            in_degree,
            out_degree,
        });
    }
    require_lambda(d, k)?;
    let mut ins: Vec<usize> = d.in_arcs(s).iter().map(|&(_, id)| id).collect();
    let mut outs: Vec<usize> = d.out_arcs(s).iter().map(|&(_, id)| id).collect();
    ins.sort_unstable();
    outs.sort_unstable();
    // Loops are a last resort: only when every loop-free pairing fails.
    let mut pairs = Vec::new();
    let found = [false, true].into_iter().any(|loops| {
        pair_up(
            d,
            s,
            k,
            &ins,
            &outs,
            fast,
            loops,
            &mut vec![false; outs.len()],
            &mut pairs,
        )
    });
    if !found {
        return Err(Error::NoPairing(s));
    }
    let shift = |v: usize| if v > s { v - 1 } else { v };
    let kept: Vec<usize> = (0..d.arc_count())
        .filter(|&id| {
            let (u, v) = d.arc(id);
            u != s && v != s
        })
        .collect();
    let mut arcs: Vec<(usize, usize)> = kept.iter().map(|&id| d.arc(id)).collect();
    arcs.extend(shortcuts(d, &pairs));
    let reduced = Digraph::new(
        n - 1,
        arcs.into_iter()
            .map(|(u, v)| (shift(u), shift(v)))
            .collect(),
    )?;
    if !lambda_at_least(&reduced, k) {
        return Err(Error::InternalInvariantViolation(format!(
            "splitting off {s} dropped the arc-connectivity below {k}"
        )));
    }
    Ok(Split {
        reduced,
        pairing: pairs,
        kept,
    })
}

/// Inverse of a split: re-inserts `record.vertex` and lifts the created arcs to it.
pub fn lift(reduced: &Digraph, record: &SplitRecord) -> Digraph {
    let s = record.vertex;
    let up = |v: usize| if v >= s { v + 1 } else { v };
    let mut created = vec![false; reduced.arc_count()];
    for &id in &record.created {
        created[id] = true;
    }
    let mut arcs: Vec<(usize, usize)> = (0..reduced.arc_count())
        .filter(|&id| !created[id])
        .map(|id| {
            let (u, v) = reduced.arc(id);
            (up(u), up(v))
        })
        .collect();
    for &(u, v) in &record.pairs {
        arcs.push((up(u), s));
        arcs.push((s, up(v)));
    }
    Digraph::new(reduced.vertex_count() + 1, arcs).expect("lifted arcs are valid")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KacOutcome {
    pub partition: Partition,
    /// Ids of the arcs of `d` forming `H`.
    pub arc_ids: Vec<usize>,
    #[serde(skip)]
    pub subgraph: Digraph,
    pub lambda_h: usize,
    pub trace: SplitTrace,
}

/// Spanning k-arc-connected subdigraph of `d` with at most `2k + 1` independent parts.
pub fn spanning_kac_partite(d: &Digraph, k: usize, fast: bool) -> Result<KacOutcome> {
    check_k(k)?;
    require_lambda(d, k)?;
    let mut trace = SplitTrace::default();
    let (part_of, mut arc_ids) = reduce(d, k, fast, &mut trace)?;
    arc_ids.sort_unstable();
    let parts = part_of.iter().max().map_or(0, |&m| m + 1);
    let partition = Partition::new(part_of, parts.max(1))?;
    let subgraph = d.arc_subgraph(&arc_ids);
    if parts > 2 * k + 1 {
        return Err(Error::InternalInvariantViolation(format!(
            "{parts} parts used"
        )));
    }
    if arc_ids.iter().any(|&id| {
        let (u, v) = d.arc(id);
        partition.part(u) == partition.part(v)
    }) {
        return Err(Error::InternalInvariantViolation(
            "an arc of H lies inside a part".into(),
        ));
    }
    let lambda_h = if d.vertex_count() >= 2 {
        global_lambda(&subgraph)?.0
    } else {
        k
    };
    if lambda_h < k {
        return Err(Error::InternalInvariantViolation(format!(
            "lambda(H) = {lambda_h} < {k}"
        )));
    }
    Ok(KacOutcome {
        partition,
        arc_ids,
        subgraph,
        lambda_h,
        trace,
    })
}

/// Colouring of `d` and the ids of the arcs of `d` that form `H`.
fn reduce(
    d: &Digraph,
    k: usize,
    fast: bool,
    trace: &mut SplitTrace,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = d.vertex_count();
    if n <= 2 * k + 1 {
        return Ok(((0..n).collect(), (0..d.arc_count()).collect()));
    }
    let keep = minimize_ids(d, k);
    let d0 = d.arc_subgraph(&keep);
    let s = find_low_vertex(&d0, k)?;
    let split = split_off(&d0, s, k, fast)?;
    let shift = |v: usize| if v > s { v - 1 } else { v };
    let created: Vec<usize> = (split.kept.len()..split.reduced.arc_count()).collect();
    let record = SplitRecord {
        vertex: s,
        pairs: split
            .pairing
            .iter()
            .map(|&(i, o)| (shift(d0.arc(i).0), shift(d0.arc(o).1)))
            .collect(),
        created,
    };
    if lift(&split.reduced, &record).arc_multiset() != d0.arc_multiset() {
        return Err(Error::InternalInvariantViolation(format!(
            "lifting at {s} does not restore the digraph"
        )));
    }
    trace.records.push(record);
    let (sub_parts, sub_arcs) = reduce(&split.reduced, k, fast, trace)?;

    // H minus the shortcuts, plus every shortcut lifted back to s.
    let mut arcs: Vec<usize> = sub_arcs
        .iter()
        .filter(|&&id| id < split.kept.len())
        .map(|&id| split.kept[id])
        .collect();
    for &(i, o) in &split.pairing {
        arcs.push(i);
        arcs.push(o);
    }
    let up = |v: usize| if v >= s { v + 1 } else { v };
    let mut part_of = vec![0; n];
    for (v, &p) in sub_parts.iter().enumerate() {
        part_of[up(v)] = p;
    }
    let parts = sub_parts.iter().max().map_or(0, |&m| m + 1);
    let mut blocked = vec![false; parts + 1];
    for &(i, o) in &split.pairing {
        blocked[part_of[d0.arc(i).0]] = true;
        blocked[part_of[d0.arc(o).1]] = true;
    }
    part_of[s] = (0..=parts).find(|&p| !blocked[p]).expect("a part is free");
    Ok((part_of, arcs.into_iter().map(|id| keep[id]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_power_digraph;

    #[test]
    fn minimize_examples() {
        let k3 = Digraph::complete_biorientation(3);
        // Ascending ids drop 0 -> 1 and 1 -> 0, leaving two 2-cycles through 2.
        let m = minimize_arcs(&k3, 1).unwrap();
        assert_eq!(m.arcs(), &[(0, 2), (1, 2), (2, 0), (2, 1)]);
        for id in 0..m.arc_count() {
            let rest: Vec<usize> = (0..m.arc_count()).filter(|&i| i != id).collect();
            assert!(!crate::connectivity::is_strong(&m.arc_subgraph(&rest)));
        }
        let r5 = cycle_power_digraph(5, 2).unwrap();
        assert_eq!(minimize_arcs(&r5, 2).unwrap(), r5);
        let c = Digraph::cycle(6).unwrap();
        assert_eq!(minimize_arcs(&c, 1).unwrap(), c);
        assert_eq!(
            minimize_arcs(&c, 2),
            Err(Error::TooWeak {
                required: 2,
                actual: 1
            })
        );
    }

    #[test]
    fn low_vertices() {
        assert_eq!(find_low_vertex(&Digraph::cycle(3).unwrap(), 1), Ok(0));
        assert_eq!(
            find_low_vertex(&cycle_power_digraph(5, 2).unwrap(), 2),
            Ok(0)
        );
        assert_eq!(
            find_low_vertex(&Digraph::complete_biorientation(4), 2),
            Err(Error::NotFound(2))
        );
    }

    #[test]
    fn split_shortens_a_cycle() {
        let c = Digraph::cycle(5).unwrap();
        let split = split_off(&c, 2, 1, false).unwrap();
        assert_eq!(
            split.reduced,
            Digraph::new(4, vec![(0, 1), (2, 3), (3, 0), (1, 2)]).unwrap()
        );
        assert_eq!(split.pairing, vec![(1, 2)]);
    }

    #[test]
    fn split_r5_and_lift_back() {
        let r5 = cycle_power_digraph(5, 2).unwrap();
        for s in 0..5 {
            for fast in [false, true] {
                let split = split_off(&r5, s, 2, fast).unwrap();
                assert_eq!(split.reduced.vertex_count(), 4);
                assert!(lambda_at_least(&split.reduced, 2));
                let shift = |v: usize| if v > s { v - 1 } else { v };
                let record = SplitRecord {
                    vertex: s,
                    pairs: split
                        .pairing
                        .iter()
                        .map(|&(i, o)| (shift(r5.arc(i).0), shift(r5.arc(o).1)))
                        .collect(),
                    created: (split.kept.len()..split.reduced.arc_count()).collect(),
                };
                assert_eq!(
                    lift(&split.reduced, &record).arc_multiset(),
                    r5.arc_multiset()
                );
            }
        }
    }

    #[test]
    fn loops_are_never_created() {
        // Pairing 0 -> 1 with 1 -> 0 would make a loop; 0 -> 2 and 2 -> 0 are used instead.
        let d = Digraph::new(3, vec![(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]).unwrap();
        let split = split_off(&d, 1, 2, false).unwrap();
        for &(i, o) in &split.pairing {
            assert_ne!(d.arc(i).0, d.arc(o).1);
        }
        assert_eq!(
            split_off(&Digraph::path(3), 0, 1, false),
            Err(Error::Unbalanced {
                vertex: 0,
                in_degree: 0,
                out_degree: 1
            })
        );
    }

    #[test]
    fn base_case_is_singletons() {
        for k in 1..4 {
            let r = cycle_power_digraph(2 * k + 1, k).unwrap();
            let out = spanning_kac_partite(&r, k, false).unwrap();
            assert_eq!(out.partition.nonempty_part_count(), 2 * k + 1);
            assert_eq!(out.subgraph, r);
            assert!(out.trace.records.is_empty());
        }
    }

    #[test]
    fn biorientation_of_k6() {
        let d = Digraph::complete_biorientation(6);
        for k in 1..=2 {
            let out = spanning_kac_partite(&d, k, false).unwrap();
            assert!(out.lambda_h >= k);
            assert!(out.partition.nonempty_part_count() <= 2 * k + 1);
            assert!(!out.trace.records.is_empty());
        }
    }
}
