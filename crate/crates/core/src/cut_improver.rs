//! Spanning k-partite subgraphs that keep a `(k-1)/k` fraction of the
//! edge-connectivity, by cyclic-shift improvement on minimum cuts.
//!
//! Given a k-partition `(V_1..V_k)` and a cut `X`, write `X_i = X ∩ V_i`,
//! `Y_i = V_i \ X`. Shift `l` pairs `X_i` with `Y_{i+l}`, and `e_l` counts the cut
//! edges between paired sets. Moving every `Y_j` to part `j - q` turns the `e_0`
//! monochromatic cut edges into crossing ones and the `e_q` edges into
//! monochromatic ones, so any `q` with `e_q < e_0` strictly gains.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::{global_lambda, CutWitness};
use crate::error::{Error, Result};
use crate::graph::{Graph, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftScores {
    /// `e_0 .. e_{k-1}`.
    pub scores: Vec<usize>,
    /// `X_i` for each part `i`.
    pub x_parts: Vec<Vec<usize>>,
    /// `Y_i` for each part `i`.
    pub y_parts: Vec<Vec<usize>>,
}

impl ShiftScores {
    /// Smallest `q >= 1` with `e_q < e_0`.
    pub fn improving_shift(&self) -> Option<usize> {
        (1..self.scores.len()).find(|&q| self.scores[q] < self.scores[0])
    }
}

pub fn shift_scores(g: &Graph, p: &Partition, witness: &CutWitness) -> Result<ShiftScores> {
    let n = g.vertex_count();
    p.check_len(n)?;
    let k = p.part_count();
    let side = witness.mask(n);
    let mut scores = vec![0; k];
    for &(u, v) in g.edges() {
        let (x, y) = match (side[u], side[v]) {
            (true, false) => (u, v),
            (false, true) => (v, u),
            _ => continue,
        };
        scores[(p.part(y) + k - p.part(x)) % k] += 1;
    }
    let mut x_parts = vec![Vec::new(); k];
    let mut y_parts = vec![Vec::new(); k];
    for v in 0..n {
        if side[v] {
            x_parts[p.part(v)].push(v);
        } else {
            y_parts[p.part(v)].push(v);
        }
    }
    Ok(ShiftScores {
        scores,
        x_parts,
        y_parts,
    })
}

/// Part `i` becomes `X_i ∪ Y_{i+q}`.
pub fn apply_shift(p: &Partition, witness: &CutWitness, q: usize) -> Result<Partition> {
    let k = p.part_count();
    if q == 0 || q >= k {
        return Err(Error::BadShift { q, k });
    }
    let side = witness.mask(p.len());
    let part_of = (0..p.len())
        .map(|v| {
            if side[v] {
                p.part(v)
            } else {
                (p.part(v) + k - q) % k
            }
        })
        .collect();
    Partition::new(part_of, k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftStep {
    pub lambda_h: usize,
    pub witness: CutWitness,
    pub scores: Vec<usize>,
    pub shift: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KPartiteOutcome {
    pub partition: Partition,
    pub subgraph: Graph,
    pub iterations: usize,
    pub lambda_g: usize,
    pub lambda_h: usize,
    pub target: usize,
    pub trace: Vec<ShiftStep>,
}

/// `ceil((k-1)/k * lambda)`.
pub fn target_lambda(lambda: usize, k: usize) -> usize {
    ((k - 1) * lambda).div_ceil(k)
}

/// Round-robin over the identity order for seed 0, over a seeded shuffle otherwise.
pub fn initial_partition(n: usize, k: usize, seed: u64) -> Partition {
    let mut order: Vec<usize> = (0..n).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut part_of = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        part_of[v] = pos % k;
    }
    Partition::new(part_of, k).expect("round robin is valid")
}

/// Spanning k-partite `H` with `lambda(H) >= ceil((k-1)/k * lambda(G))`.
pub fn spanning_kpartite_ec(g: &Graph, k: usize, seed: u64) -> Result<KPartiteOutcome> {
    let n = g.vertex_count();
    if k < 2 || k > n {
        return Err(Error::BadParameters(format!(
            "need 2 <= k <= n, got k={k}, n={n}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let lambda_g = global_lambda(g)?.0;
    let target = target_lambda(lambda_g, k);
    let mut p = initial_partition(n, k, seed);
    let mut trace = Vec::new();
    loop {
        let h = g.partite_subgraph(&p)?;
        let (lambda_h, witness) = global_lambda(&h)?;
        if lambda_h >= target {
            return Ok(KPartiteOutcome {
                partition: p,
                subgraph: h,
                iterations: trace.len(),
                lambda_g,
                lambda_h,
                target,
                trace,
            });
        }
        let scores = shift_scores(g, &p, &witness)?;
        let q = scores.improving_shift().ok_or_else(|| {
            Error::InternalInvariantViolation(format!(
                "lambda(H) = {lambda_h} < {target} but no improving shift; scores {:?}, witness {:?}",
                scores.scores, witness.side
            ))
        })?;
        p = apply_shift(&p, &witness, q)?;
        trace.push(ShiftStep {
            lambda_h,
            witness,
            scores: scores.scores,
            shift: q,
        });
        if trace.len() > g.edge_count() {
            return Err(Error::InternalInvariantViolation(
                "more improvement steps than edges".into(),
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::global_lambda;

    fn witness(g: &Graph, side: &[usize]) -> CutWitness {
        let mut mask = vec![false; g.vertex_count()];
        for &v in side {
            mask[v] = true;
        }
        CutWitness::from_mask(g, &mask)
    }

    #[test]
    fn k4_scores_and_shift() {
        let g = Graph::complete(4);
        let p = Partition::new(vec![0, 0, 1, 1], 2).unwrap();
        let w = witness(&g, &[0, 2]);
        let s = shift_scores(&g, &p, &w).unwrap();
        assert_eq!(s.scores, vec![2, 2]);
        assert_eq!(s.x_parts, vec![vec![0], vec![2]]);
        assert_eq!(s.y_parts, vec![vec![1], vec![3]]);
        assert_eq!(s.improving_shift(), None);
    }

    #[test]
    fn shift_gains_exactly_the_score_difference() {
        // All four vertices in part 0 of a 2-partition: e_0 = 4 for X = {0, 1}.
        let g = Graph::complete(4);
        let p = Partition::new(vec![0, 0, 0, 0], 2).unwrap();
        let w = witness(&g, &[0, 1]);
        let s = shift_scores(&g, &p, &w).unwrap();
        assert_eq!(s.scores, vec![4, 0]);
        let q = s.improving_shift().unwrap();
        let p2 = apply_shift(&p, &w, q).unwrap();
        let before = g.crossing_edge_ids(&p).unwrap().len();
        let after = g.crossing_edge_ids(&p2).unwrap().len();
        assert_eq!(after - before, s.scores[0] - s.scores[q]);
    }

    #[test]
    fn whole_part_witness_has_no_monochromatic_cut_edge() {
        let g = Graph::cycle(6).unwrap();
        let p = Partition::new(vec![0, 1, 2, 0, 1, 2], 3).unwrap();
        let w = witness(&g, &[0, 3]);
        let s = shift_scores(&g, &p, &w).unwrap();
        assert_eq!(s.scores[0], 0);
        assert_eq!(s.scores.iter().sum::<usize>(), w.value);
    }

    #[test]
    fn singleton_parts_never_call_for_a_shift() {
        let g = Graph::complete(4);
        let p = Partition::singletons(4);
        let w = witness(&g, &[1, 2]);
        let s = shift_scores(&g, &p, &w).unwrap();
        assert_eq!(s.scores[0], 0);
        assert_eq!(s.improving_shift(), None);
        assert_eq!(apply_shift(&p, &w, 4), Err(Error::BadShift { q: 4, k: 4 }));
        assert_eq!(apply_shift(&p, &w, 0), Err(Error::BadShift { q: 0, k: 4 }));
    }

    #[test]
    fn guarantee_on_small_graphs() {
        let k4 = spanning_kpartite_ec(&Graph::complete(4), 2, 0).unwrap();
        assert!(k4.lambda_h >= 2);
        assert_eq!(global_lambda(&k4.subgraph).unwrap().0, k4.lambda_h);
        let c5 = spanning_kpartite_ec(&Graph::cycle(5).unwrap(), 2, 0).unwrap();
        assert!(c5.lambda_h >= 1);
        let pet = spanning_kpartite_ec(&Graph::petersen(), 3, 0).unwrap();
        assert!(pet.lambda_h >= 2);
        for seed in 0..20 {
            let out = spanning_kpartite_ec(&Graph::petersen(), 2, seed).unwrap();
            assert!(out.lambda_h >= 2 && out.iterations <= 15);
        }
    }

    #[test]
    fn bad_inputs() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_kpartite_ec(&g, 2, 0), Err(Error::Disconnected));
        assert!(matches!(
            spanning_kpartite_ec(&Graph::complete(3), 4, 0),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn one_more_part_than_lambda_keeps_lambda() {
        let g = Graph::petersen();
        let out = spanning_kpartite_ec(&g, 4, 0).unwrap();
        assert!(out.lambda_h >= 3);
    }
}
