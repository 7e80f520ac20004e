//! Exhaustive searches used as ground truth for the constructive routines.
//! Every "none" verdict is reached only after the whole space was enumerated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Partition};

pub const STRONG_BIP_CAP: usize = 24;
pub const THREE_STRONG_CAP: usize = 20;
pub const CHI_CAP: usize = 20;
pub const MAX_KCUT_CAP: usize = 16;
pub const PARTITION_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Found,
    ExhaustedNone,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub verdict: Verdict,
    pub certificate: Option<Partition>,
    pub examined: u64,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        self.verdict == Verdict::Found
    }
}

fn cap(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge(format!("{n} vertices, cap is {limit}")));
    }
    Ok(())
}

/// Out- and in-neighbourhoods as bit masks.
struct Masks {
    out: Vec<u64>,
    inc: Vec<u64>,
}

impl Masks {
    fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        let mut out = vec![0u64; n];
        let mut inc = vec![0u64; n];
        for &(u, v) in d.arcs() {
            out[u] |= 1 << v;
            inc[v] |= 1 << u;
        }
        Masks { out, inc }
    }

    /// Vertices of `within` reachable from `start` using arcs allowed by `step`.
    fn reach(&self, start: usize, within: u64, nbrs: &[u64], step: impl Fn(usize) -> u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = nbrs[v] & step(v) & within & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Strong on the vertex set `within`, using arcs `u -> v` with `v` in `step(u)`.
    fn strong(&self, within: u64, step: impl Fn(usize) -> u64 + Copy) -> bool {
        if within == 0 {
            return false;
        }
        let s = within.trailing_zeros() as usize;
        self.reach(s, within, &self.out, step) == within
            && self.reach(s, within, &self.inc, step) == within
    }
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Searches bipartitions with vertex 0 on side 0, in increasing mask order.
fn search_bipartitions(n: usize, mut test: impl FnMut(u64) -> bool) -> SearchReport {
    let all = full(n);
    let total = 1u64 << n.saturating_sub(1);
    for mask in 0..total {
        let side1 = (mask << 1) & all;
        if test(side1) {
            let part_of = (0..n).map(|v| ((side1 >> v) & 1) as usize).collect();
            return SearchReport {
                verdict: Verdict::Found,
                certificate: Some(Partition::new(part_of, 2).expect("two parts")),
                examined: mask + 1,
            };
        }
    }
    SearchReport {
        verdict: Verdict::ExhaustedNone,
        certificate: None,
        examined: total,
    }
}

/// Is there a bipartition whose crossing subdigraph is strong?
pub fn exists_strong_bipartite(d: &Digraph, n_cap: usize) -> Result<SearchReport> {
    let n = d.vertex_count();
    cap(n, n_cap.min(63))?;
    let m = Masks::new(d);
    let all = full(n);
    Ok(search_bipartitions(n, |side1| {
        let other = |v: usize| {
            if side1 >> v & 1 == 1 {
                all & !side1
            } else {
                side1
            }
        };
        m.strong(all, other)
    }))
}

/// Is there a bipartition with both sides and the crossing subdigraph strong?
pub fn exists_three_strong_bipartition(d: &Digraph, n_cap: usize) -> Result<SearchReport> {
    let n = d.vertex_count();
    cap(n, n_cap.min(63))?;
    let m = Masks::new(d);
    let all = full(n);
    Ok(search_bipartitions(n, |side1| {
        let side0 = all & !side1;
        let other = |v: usize| if side1 >> v & 1 == 1 { side0 } else { side1 };
        side1 != 0 && m.strong(side0, |_| all) && m.strong(side1, |_| all) && m.strong(all, other)
    }))
}

/// Exact chromatic number by trying `k = 1, 2, ...` with backtracking.
pub fn chromatic_number(g: &Graph, n_cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    cap(n, n_cap)?;
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| g.incident(v).iter().map(|&(w, _)| w).collect())
        .collect();
    fn colour(
        order: &[usize],
        nbrs: &[Vec<usize>],
        c: &mut [usize],
        i: usize,
        k: usize,
        used: usize,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // A fresh colour is interchangeable with any other unused one.
        for x in 0..k.min(used + 1) {
            if nbrs[v].iter().all(|&w| c[w] != x) {
                c[v] = x;
                if colour(order, nbrs, c, i + 1, k, used.max(x + 1)) {
                    return true;
                }
                c[v] = usize::MAX;
            }
        }
        false
    }
    (1..=n)
        .find(|&k| colour(&order, &nbrs, &mut vec![usize::MAX; n], 0, k, 0))
        .ok_or_else(|| Error::InternalInvariantViolation("n colours always suffice".into()))
}

/// Visits every assignment of `0..n` to at most `t` blocks once up to renaming
/// (restricted growth strings). `visit` returns true to stop.
pub fn for_each_partition(
    n: usize,
    t: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> (u64, bool) {
    fn rec(
        a: &mut Vec<usize>,
        n: usize,
        t: usize,
        blocks: usize,
        count: &mut u64,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if a.len() == n {
            *count += 1;
            return visit(a);
        }
        for b in 0..t.min(blocks + 1) {
            a.push(b);
            let stop = rec(a, n, t, blocks.max(b + 1), count, visit);
            a.pop();
            if stop {
                return true;
            }
        }
        false
    }
    let mut count = 0;
    let stopped = rec(&mut Vec::with_capacity(n), n, t, 0, &mut count, &mut visit);
    (count, stopped)
}

/// `sum_{j <= t} S(n, j)`: partitions of an `n`-set into at most `t` blocks.
pub fn partition_count(n: usize, t: usize) -> u64 {
    let mut s = vec![vec![0u64; t + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for j in 1..=t {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    s[n].iter().sum()
}

/// A `k`-partition with the most crossing edges; the first maximum in
/// enumeration order is returned.
pub fn exact_max_kcut(g: &Graph, k: usize, n_cap: usize) -> Result<(Partition, usize)> {
    let n = g.vertex_count();
    cap(n, n_cap)?;
    if k == 0 {
        return Err(Error::BadParameters("k must be positive".into()));
    }
    let mut best: Option<(Vec<usize>, usize)> = None;
    for_each_partition(n, k, |a| {
        let value = g.edges().iter().filter(|&&(u, v)| a[u] != a[v]).count();
        if best.as_ref().is_none_or(|b| value > b.1) {
            best = Some((a.to_vec(), value));
        }
        false
    });
    let (a, value) = best.expect("at least one partition");
    Ok((Partition::new(a, k)?, value))
}

/// Per-vertex condition on the crossing subdigraph of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreePredicate {
    MinSemiDegree(usize),
    MinOutDegree(usize),
    /// At least half of every vertex's out-arcs cross.
    Majority,
}

impl DegreePredicate {
    pub fn holds(&self, d: &Digraph, part: &[usize]) -> bool {
        (0..d.vertex_count()).all(|v| {
            let out = d
                .out_arcs(v)
                .iter()
                .filter(|&&(w, _)| part[w] != part[v])
                .count();
            match *self {
                DegreePredicate::MinOutDegree(c) => out >= c,
                DegreePredicate::MinSemiDegree(c) => {
                    out >= c
                        && d.in_arcs(v)
                            .iter()
                            .filter(|&&(u, _)| part[u] != part[v])
                            .count()
                            >= c
                }
                DegreePredicate::Majority => 2 * out >= d.out_degree(v),
            }
        })
    }
}

/// Is there a partition into at most `t` parts whose crossing subdigraph satisfies `pred`?
pub fn exists_partition_with(
    d: &Digraph,
    t: usize,
    pred: DegreePredicate,
    n_cap: usize,
) -> Result<SearchReport> {
    let n = d.vertex_count();
    cap(n, n_cap)?;
    if t == 0 {
        return Err(Error::BadParameters("t must be positive".into()));
    }
    let mut cert = None;
    let (examined, stopped) = for_each_partition(n, t, |a| {
        if pred.holds(d, a) {
            cert = Some(a.to_vec());
            return true;
        }
        false
    });
    Ok(SearchReport {
        verdict: if stopped {
            Verdict::Found
        } else {
            Verdict::ExhaustedNone
        },
        certificate: cert.map(|a| Partition::new(a, t)).transpose()?,
        examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{dkr, exceptional, odd_wheel, rotative_tournament};

    #[test]
    fn strong_bipartite_examples() {
        let t5 = exceptional("T5").unwrap();
        let r = exists_strong_bipartite(&t5, STRONG_BIP_CAP).unwrap();
        assert_eq!(r.verdict, Verdict::ExhaustedNone);
        assert_eq!(r.examined, 16);
        assert!(
            exists_strong_bipartite(&Digraph::cycle(4).unwrap(), STRONG_BIP_CAP)
                .unwrap()
                .found()
        );
        assert!(
            !exists_strong_bipartite(&exceptional("S_{5,1}").unwrap(), STRONG_BIP_CAP)
                .unwrap()
                .found()
        );
        // Recognised as exceptional by name, yet {a,e} | {b,c,d} is good.
        let s52 =
            exists_strong_bipartite(&exceptional("S_{5,2}").unwrap(), STRONG_BIP_CAP).unwrap();
        assert_eq!(s52.certificate.unwrap().assignment(), &[0, 1, 1, 1, 0]);
        assert!(matches!(
            exists_strong_bipartite(&Digraph::cycle(30).unwrap(), STRONG_BIP_CAP),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn three_strong_examples() {
        let k6 = Digraph::complete_biorientation(6);
        let r = exists_three_strong_bipartition(&k6, THREE_STRONG_CAP).unwrap();
        let p = r.certificate.unwrap();
        assert!(crate::connectivity::is_strong(
            &k6.partite_subgraph(&p).unwrap()
        ));
        assert!(
            !exists_three_strong_bipartition(&Digraph::cycle(6).unwrap(), THREE_STRONG_CAP)
                .unwrap()
                .found()
        );
        let r7 =
            exists_three_strong_bipartition(&rotative_tournament(3).unwrap(), THREE_STRONG_CAP)
                .unwrap();
        assert_eq!(r7.certificate.is_some(), r7.found());
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(
            chromatic_number(&odd_wheel(7).unwrap(), CHI_CAP).unwrap(),
            4
        );
        assert_eq!(
            chromatic_number(&Graph::cycle(6).unwrap(), CHI_CAP).unwrap(),
            2
        );
        assert_eq!(chromatic_number(&Graph::petersen(), CHI_CAP).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::complete(5), CHI_CAP).unwrap(), 5);
    }

    #[test]
    fn max_cuts() {
        assert_eq!(
            exact_max_kcut(&Graph::cycle(5).unwrap(), 2, MAX_KCUT_CAP)
                .unwrap()
                .1,
            4
        );
        assert_eq!(
            exact_max_kcut(&Graph::complete(4), 2, MAX_KCUT_CAP)
                .unwrap()
                .1,
            4
        );
        assert_eq!(
            exact_max_kcut(&Graph::petersen(), 2, MAX_KCUT_CAP)
                .unwrap()
                .1,
            12
        );
    }

    #[test]
    fn enumeration_counts_match_stirling() {
        for n in 0..8 {
            for t in 1..5 {
                assert_eq!(for_each_partition(n, t, |_| false).0, partition_count(n, t));
            }
        }
        assert_eq!(partition_count(5, 5), 52);
    }

    #[test]
    fn partition_predicates() {
        let r3 = rotative_tournament(1).unwrap();
        assert!(
            exists_partition_with(&r3, 3, DegreePredicate::MinSemiDegree(1), PARTITION_CAP)
                .unwrap()
                .found()
        );
        let r5 = rotative_tournament(2).unwrap();
        assert!(
            exists_partition_with(&r5, 2, DegreePredicate::MinOutDegree(1), PARTITION_CAP)
                .unwrap()
                .found()
        );
        let none =
            exists_partition_with(&r3, 2, DegreePredicate::MinOutDegree(1), PARTITION_CAP).unwrap();
        assert_eq!(none.verdict, Verdict::ExhaustedNone);
        let d12 = dkr(1, 2).unwrap();
        assert!(
            !exists_partition_with(&d12, 2, DegreePredicate::MinSemiDegree(1), PARTITION_CAP)
                .unwrap()
                .found()
        );
    }
}
