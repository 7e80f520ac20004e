//! Ear decompositions of strong digraphs, and the spanning strong 3-partite
//! subdigraph obtained by stopping once every vertex is covered.

use std::collections::VecDeque;

use serde::Serialize;

use crate::connectivity::is_strong;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_colouring, two_colouring, Digraph, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ear {
    /// Vertex sequence; for the starting cycle the first vertex is not repeated.
    pub vertices: Vec<usize>,
    pub arcs: Vec<usize>,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    pub fn nontrivial(&self) -> impl Iterator<Item = &Ear> {
        self.ears.iter().filter(|e| !e.trivial)
    }
}

/// A shortest cycle, found by BFS from every vertex; ties go to the smallest start.
pub fn shortest_cycle(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut closing = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &(w, _) in d.out_arcs(u) {
                if w == s {
                    closing = Some(u);
                    break 'bfs;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if let Some(mut u) = closing {
            if best.as_ref().is_some_and(|b| b.len() <= dist[u] + 1) {
                continue;
            }
            let mut cycle = vec![u];
            while u != s {
                u = parent[u];
                cycle.push(u);
            }
            cycle.reverse();
            best = Some(cycle);
        }
    }
    best
}

fn smallest_unused_arc(d: &Digraph, used: &[bool], u: usize, v: usize) -> Option<usize> {
    d.out_arcs(u)
        .iter()
        .filter(|&&(w, id)| w == v && !used[id])
        .map(|&(_, id)| id)
        .min()
}

struct Builder<'d> {
    d: &'d Digraph,
    used: Vec<bool>,
    covered: Vec<bool>,
    ears: Vec<Ear>,
}

impl<'d> Builder<'d> {
    fn start(d: &'d Digraph, cycle: &[usize]) -> Result<Self> {
        let n = d.vertex_count();
        let mut b = Builder {
            d,
            used: vec![false; d.arc_count()],
            covered: vec![false; n],
            ears: Vec::new(),
        };
        if cycle.len() < 2 {
            return Err(Error::BadStartCycle);
        }
        let mut arcs = Vec::with_capacity(cycle.len());
        for (i, &u) in cycle.iter().enumerate() {
            if u >= n || b.covered[u] {
                return Err(Error::BadStartCycle);
            }
            b.covered[u] = true;
            let v = cycle[(i + 1) % cycle.len()];
            if v >= n {
                return Err(Error::BadStartCycle);
            }
            let id = smallest_unused_arc(d, &b.used, u, v).ok_or(Error::BadStartCycle)?;
            b.used[id] = true;
            arcs.push(id);
        }
        b.ears.push(Ear {
            vertices: cycle.to_vec(),
            arcs,
            trivial: false,
        });
        Ok(b)
    }

    fn all_covered(&self) -> bool {
        self.covered.iter().all(|&c| c)
    }

    /// Shortest path leaving the covered set, through at least one new vertex, and
    /// back. Ties go to the smallest first new vertex.
    fn add_shortest_ear(&mut self) -> bool {
        let n = self.d.vertex_count();
        let mut dist = vec![usize::MAX; n];
        let mut origin = vec![usize::MAX; n];
        let mut pred_arc = vec![usize::MAX; n];
        let mut frontier = Vec::new();
        for w in 0..n {
            if self.covered[w] {
                continue;
            }
            if let Some(&(_, id)) = self
                .d
                .in_arcs(w)
                .iter()
                .filter(|&&(c, _)| self.covered[c])
                .min_by_key(|&&(_, id)| id)
            {
                dist[w] = 1;
                origin[w] = w;
                pred_arc[w] = id;
                frontier.push(w);
            }
        }
        while !frontier.is_empty() {
            // Close the ear at this level if any frontier vertex returns to the set.
            let closing = frontier
                .iter()
                .filter_map(|&w| {
                    self.d
                        .out_arcs(w)
                        .iter()
                        .filter(|&&(c, _)| self.covered[c])
                        .map(|&(_, id)| id)
                        .min()
                        .map(|id| (origin[w], w, id))
                })
                .min();
            if let Some((_, last, back)) = closing {
                let mut arcs = vec![back];
                let mut vertices = vec![self.d.arc(back).1, last];
                let mut u = last;
                loop {
                    let a = pred_arc[u];
                    arcs.push(a);
                    let tail = self.d.arc(a).0;
                    vertices.push(tail);
                    if dist[u] == 1 {
                        break;
                    }
                    u = tail;
                }
                arcs.reverse();
                vertices.reverse();
                for &a in &arcs {
                    self.used[a] = true;
                }
                for &v in &vertices[1..vertices.len() - 1] {
                    self.covered[v] = true;
                }
                self.ears.push(Ear {
                    vertices,
                    arcs,
                    trivial: false,
                });
                return true;
            }
            let mut next = Vec::new();
            for &u in &frontier {
                for &(w, id) in self.d.out_arcs(u) {
                    if !self.covered[w] && dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        origin[w] = origin[u];
                        pred_arc[w] = id;
                        next.push(w);
                    }
                }
            }
            next.sort_unstable_by_key(|&w| (origin[w], w));
            frontier = next;
        }
        false
    }

    fn add_trivial_ears(&mut self) {
        for id in 0..self.d.arc_count() {
            if !self.used[id] {
                self.used[id] = true;
                let (u, v) = self.d.arc(id);
                self.ears.push(Ear {
                    vertices: vec![u, v],
                    arcs: vec![id],
                    trivial: true,
                });
            }
        }
    }
}

fn checked_start(d: &Digraph, start: Option<&[usize]>) -> Result<Vec<usize>> {
    let n = d.vertex_count();
    if n < 2 {
        return Err(Error::TooSmall(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    if !is_strong(d) {
        return Err(Error::NotStrong);
    }
    match start {
        Some(c) => Ok(c.to_vec()),
        None => shortest_cycle(d).ok_or(Error::NotStrong),
    }
}

/// Complete ear decomposition starting at `start` (or a shortest cycle).
pub fn ear_decomposition(d: &Digraph, start: Option<&[usize]>) -> Result<EarDecomposition> {
    let cycle = checked_start(d, start)?;
    let mut b = Builder::start(d, &cycle)?;
    while !b.all_covered() {
        if !b.add_shortest_ear() {
            return Err(Error::NotStrong);
        }
    }
    b.add_trivial_ears();
    Ok(EarDecomposition { ears: b.ears })
}

/// Replays the ears and checks they rebuild `d` arc for arc.
pub fn validate_ear_decomposition(d: &Digraph, ed: &EarDecomposition) -> bool {
    let n = d.vertex_count();
    let mut covered = vec![false; n];
    let mut used = vec![false; d.arc_count()];
    for (i, ear) in ed.ears.iter().enumerate() {
        let vs = &ear.vertices;
        let closed = i == 0;
        let hops = if closed {
            vs.len()
        } else {
            vs.len().saturating_sub(1)
        };
        if ear.arcs.len() != hops || hops == 0 || ear.trivial != (hops == 1 && !closed) {
            return false;
        }
        for (j, &a) in ear.arcs.iter().enumerate() {
            if a >= used.len() || used[a] {
                return false;
            }
            used[a] = true;
            let (u, v) = (vs[j], vs[(j + 1) % vs.len()]);
            if d.arc(a) != (u, v) {
                return false;
            }
        }
        if closed {
            let mut seen = vec![false; n];
            for &v in vs {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
                covered[v] = true;
            }
        } else {
            let (first, last) = (vs[0], vs[vs.len() - 1]);
            if !covered[first] || !covered[last] {
                return false;
            }
            for &v in &vs[1..vs.len() - 1] {
                if covered[v] {
                    return false;
                }
                covered[v] = true;
            }
        }
    }
    used.iter().all(|&u| u) && covered.iter().all(|&c| c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strong3Partite {
    pub partition: Partition,
    /// `D_q`: the starting cycle plus the non-trivial ears, arcs in id order.
    pub subgraph: Digraph,
    /// Id in the input digraph of each arc of `subgraph`.
    pub arc_ids: Vec<usize>,
}

/// Spanning strong subdigraph whose parts (at most 3) are independent in it.
pub fn strong_3partite(d: &Digraph) -> Result<Strong3Partite> {
    let cycle = checked_start(d, None)?;
    let mut b = Builder::start(d, &cycle)?;
    while !b.all_covered() {
        if !b.add_shortest_ear() {
            return Err(Error::NotStrong);
        }
    }
    let arc_ids: Vec<usize> = (0..d.arc_count()).filter(|&a| b.used[a]).collect();
    let dq = d.arc_subgraph(&arc_ids);
    let ug = dq.underlying_graph();
    let colour = two_colouring(&ug).unwrap_or_else(|| degeneracy_colouring(&ug));
    let partition = Partition::from_assignment(colour);
    if partition.part_count() > 3 {
        return Err(Error::InternalInvariantViolation(format!(
            "ear union needed {} colours",
            partition.part_count()
        )));
    }
    if dq.crossing_arc_ids(&partition)?.len() != dq.arc_count() || !is_strong(&dq) {
        return Err(Error::InternalInvariantViolation(
            "ear union colouring is not proper or not strong".into(),
        ));
    }
    Ok(Strong3Partite {
        partition,
        subgraph: dq,
        arc_ids,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::degeneracy_order;

    fn bowtie() -> Digraph {
        Digraph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn cycle_is_one_ear() {
        let d = Digraph::cycle(3).unwrap();
        let ed = ear_decomposition(&d, None).unwrap();
        assert_eq!(ed.ears.len(), 1);
        assert!(validate_ear_decomposition(&d, &ed));
    }

    #[test]
    fn bowtie_has_one_ear_of_size_three() {
        let d = bowtie();
        let ed = ear_decomposition(&d, None).unwrap();
        assert_eq!(ed.ears.len(), 2);
        assert_eq!(ed.ears[1].arcs.len(), 3);
        assert!(!ed.ears[1].trivial);
        assert!(validate_ear_decomposition(&d, &ed));
    }

    #[test]
    fn biorientation_of_triangle_from_a_triangle() {
        let d = Digraph::complete_biorientation(3);
        let ed = ear_decomposition(&d, Some(&[0, 1, 2])).unwrap();
        assert_eq!(ed.ears.len(), 4);
        assert_eq!(ed.ears.iter().filter(|e| e.trivial).count(), 3);
        assert!(validate_ear_decomposition(&d, &ed));
    }

    #[test]
    fn start_cycle_errors() {
        let d = Digraph::cycle(4).unwrap();
        assert_eq!(
            ear_decomposition(&d, Some(&[0, 2])),
            Err(Error::BadStartCycle)
        );
        assert_eq!(
            ear_decomposition(&d, Some(&[0, 1, 2, 3, 0])),
            Err(Error::BadStartCycle)
        );
        assert_eq!(
            ear_decomposition(&Digraph::path(3), None),
            Err(Error::NotStrong)
        );
    }

    #[test]
    fn three_partite_on_cycles() {
        let c5 = Digraph::cycle(5).unwrap();
        let out = strong_3partite(&c5).unwrap();
        assert_eq!(out.partition.part_count(), 3);
        assert_eq!(out.subgraph.arc_count(), 5);
        let c4 = Digraph::cycle(4).unwrap();
        assert_eq!(strong_3partite(&c4).unwrap().partition.part_count(), 2);
    }

    #[test]
    fn ear_union_is_two_degenerate() {
        let d = Digraph::complete_biorientation(6);
        let out = strong_3partite(&d).unwrap();
        assert!(degeneracy_order(&out.subgraph.underlying_graph(), 2).is_some());
        assert!(is_strong(&d.partite_subgraph(&out.partition).unwrap()));
    }
}
