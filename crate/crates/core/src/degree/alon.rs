//! Partitions of a weighted index set in which every index carries at most twice
//! its part's share of its own row weight.
//!
//! The existence proof is not constructive, so the search here is a local
//! search whose answer is checked before it is returned.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Partition;
use crate::scalar::Scalar;

/// Square matrix with zero diagonal, non-negative entries and row sums at most 1,
/// plus positive part weights summing to 1. Rows are stored sparsely.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMatrix<S> {
    n: usize,
    rows: Vec<Vec<(usize, S)>>,
    weights: Vec<S>,
}

impl<S: Scalar> WeightMatrix<S> {
    /// Entries are `(i, j, a_ij)`; repeated positions are added up.
    pub fn new(n: usize, entries: Vec<(usize, usize, S)>, weights: Vec<S>) -> Result<Self> {
        let mut dense: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for (i, j, a) in entries {
            if i >= n || j >= n {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({i}, {j}) out of range"
                )));
            }
            if a.is_negative() {
                return Err(Error::InvalidMatrix(format!(
                    "negative entry at ({i}, {j})"
                )));
            }
            if a.is_zero() {
                continue;
            }
            if i == j {
                return Err(Error::InvalidMatrix(format!(
                    "non-zero diagonal entry at {i}"
                )));
            }
            match dense[i].iter_mut().find(|(c, _)| *c == j) {
                Some((_, v)) => *v = v.clone() + a,
                None => dense[i].push((j, a)),
            }
        }
        for (i, row) in dense.iter_mut().enumerate() {
            row.sort_by_key(|&(j, _)| j);
            let sum = row.iter().fold(S::zero(), |acc, (_, a)| acc + a.clone());
            if !sum.le_tol(&S::one()) {
                return Err(Error::InvalidMatrix(format!("row {i} sums to {sum:?} > 1")));
            }
        }
        if weights.is_empty() {
            return Err(Error::InvalidMatrix("no part weights".into()));
        }
        if weights.iter().any(|c| !c.is_positive()) {
            return Err(Error::InvalidMatrix("part weights must be positive".into()));
        }
        let total = weights.iter().fold(S::zero(), |acc, c| acc + c.clone());
        if !(total.le_tol(&S::one()) && S::one().le_tol(&total)) {
            return Err(Error::InvalidMatrix(format!(
                "part weights sum to {total:?}, not 1"
            )));
        }
        Ok(WeightMatrix {
            n,
            rows: dense,
            weights,
        })
    }

    /// `t` equal weights `1/t`.
    pub fn uniform_weights(t: usize) -> Vec<S> {
        vec![S::from_ratio(1, t as i64); t]
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    /// Non-zero entries of row `i`, by column.
    pub fn row(&self, i: usize) -> &[(usize, S)] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> S {
        self.rows[i]
            .iter()
            .find(|(c, _)| *c == j)
            .map_or_else(S::zero, |(_, a)| a.clone())
    }

    /// `sum_{j in S_r} a_ij` for `i` in part `r`.
    pub fn own_load(&self, p: &Partition, i: usize) -> S {
        let r = p.part(i);
        self.rows[i]
            .iter()
            .filter(|(j, _)| p.part(*j) == r)
            .fold(S::zero(), |acc, (_, a)| acc + a.clone())
    }

    /// First index whose own load exceeds twice its part's weight.
    pub fn violation(&self, p: &Partition) -> Option<usize> {
        (0..self.n).find(|&i| {
            let bound = self.weights[p.part(i)].clone() + self.weights[p.part(i)].clone();
            !self.own_load(p, i).le_tol(&bound)
        })
    }

    pub fn is_valid_partition(&self, p: &Partition) -> bool {
        p.len() == self.n && p.part_count() == self.parts() && self.violation(p).is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlonBudget {
    /// Moves per restart; `None` means `200 n^2`.
    pub moves: Option<u64>,
    pub restarts: u32,
    pub seed: u64,
    /// Exhaustive search is used when every restart fails and `n` is at most this.
    pub exhaustive_cap: usize,
}

impl Default for AlonBudget {
    fn default() -> Self {
        AlonBudget {
            moves: None,
            restarts: 20,
            seed: 0,
            exhaustive_cap: 15,
        }
    }
}

struct Search<'a, S> {
    m: &'a WeightMatrix<S>,
    /// Column view: `cols[j]` lists `(i, a_ij)`.
    cols: Vec<Vec<(usize, S)>>,
    part: Vec<usize>,
    /// `out_load[i][q] = sum_{j in S_q} a_ij`.
    out_load: Vec<Vec<S>>,
    /// `in_load[i][q] = sum_{j in S_q} a_ji`.
    in_load: Vec<Vec<S>>,
    /// `2 c_q`.
    bound: Vec<S>,
}

impl<'a, S: Scalar> Search<'a, S> {
    fn new(m: &'a WeightMatrix<S>, part: Vec<usize>) -> Self {
        let (n, t) = (m.n, m.parts());
        let mut cols: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for i in 0..n {
            for (j, a) in &m.rows[i] {
                cols[*j].push((i, a.clone()));
            }
        }
        let mut out_load = vec![vec![S::zero(); t]; n];
        let mut in_load = vec![vec![S::zero(); t]; n];
        for i in 0..n {
            for (j, a) in &m.rows[i] {
                out_load[i][part[*j]] = out_load[i][part[*j]].clone() + a.clone();
                in_load[*j][part[i]] = in_load[*j][part[i]].clone() + a.clone();
            }
        }
        let bound = m.weights.iter().map(|c| c.clone() + c.clone()).collect();
        Search {
            m,
            cols,
            part,
            out_load,
            in_load,
            bound,
        }
    }

    fn violated(&self, i: usize) -> bool {
        let r = self.part[i];
        !self.out_load[i][r].le_tol(&self.bound[r])
    }

    fn violators(&self) -> Vec<usize> {
        (0..self.m.n).filter(|&i| self.violated(i)).collect()
    }

    fn relocate(&mut self, v: usize, q: usize) {
        let r = self.part[v];
        if r == q {
            return;
        }
        for (i, a) in &self.cols[v] {
            self.out_load[*i][r] = self.out_load[*i][r].clone() - a.clone();
            self.out_load[*i][q] = self.out_load[*i][q].clone() + a.clone();
        }
        for (j, a) in &self.m.rows[v] {
            self.in_load[*j][r] = self.in_load[*j][r].clone() - a.clone();
            self.in_load[*j][q] = self.in_load[*j][q].clone() + a.clone();
        }
        self.part[v] = q;
    }

    /// Potential contribution of `v` sitting in part `q`: its two-way load there,
    /// scaled by the part's weight.
    fn cost(&self, v: usize, q: usize) -> S {
        (self.out_load[v][q].clone() + self.in_load[v][q].clone()) / self.m.weights[q].clone()
    }

    /// Best-improvement passes on the potential. Returns the moves spent.
    fn descend(&mut self, budget: u64) -> u64 {
        let t = self.m.parts();
        let mut spent = 0;
        loop {
            let mut improved = false;
            for v in 0..self.m.n {
                if spent >= budget {
                    return spent;
                }
                let r = self.part[v];
                let here = self.cost(v, r);
                let best = (0..t)
                    .filter(|&q| q != r)
                    .map(|q| (self.cost(v, q), q))
                    .min_by(|a, b| {
                        a.0.partial_cmp(&b.0)
                            .expect("comparable")
                            .then(a.1.cmp(&b.1))
                    });
                if let Some((c, q)) = best {
                    if c < here {
                        self.relocate(v, q);
                        spent += 1;
                        improved = true;
                    }
                }
            }
            if !improved {
                return spent;
            }
        }
    }

    /// Moves a random violator to the part where its own load is smallest
    /// relative to the bound, occasionally to a random part.
    fn repair(&mut self, rng: &mut ChaCha8Rng, budget: u64) -> bool {
        let t = self.m.parts();
        for _ in 0..budget {
            let bad = self.violators();
            let Some(&v) = bad.choose(rng) else {
                return true;
            };
            let r = self.part[v];
            let q = if t > 1 && rng.gen_ratio(1, 10) {
                let q = rng.gen_range(0..t - 1);
                if q >= r {
                    q + 1
                } else {
                    q
                }
            } else {
                (0..t)
                    .filter(|&q| q != r)
                    .map(|q| (self.out_load[v][q].clone() / self.bound[q].clone(), q))
                    .min_by(|a, b| {
                        a.0.partial_cmp(&b.0)
                            .expect("comparable")
                            .then(a.1.cmp(&b.1))
                    })
                    .map_or(r, |(_, q)| q)
            };
            self.relocate(v, q);
        }
        self.violators().is_empty()
    }
}

/// Greedy start: each index in turn joins the part with the least weighted
/// two-way load towards the indices already placed.
fn greedy_start<S: Scalar>(m: &WeightMatrix<S>) -> Vec<usize> {
    let t = m.parts();
    let mut cols: Vec<Vec<(usize, S)>> = vec![Vec::new(); m.n];
    for i in 0..m.n {
        for (j, a) in &m.rows[i] {
            cols[*j].push((i, a.clone()));
        }
    }
    let mut part = vec![usize::MAX; m.n];
    for v in 0..m.n {
        let mut load = vec![S::zero(); t];
        for (j, a) in m.rows[v].iter().chain(cols[v].iter()) {
            if part[*j] != usize::MAX {
                load[part[*j]] = load[part[*j]].clone() + a.clone();
            }
        }
        part[v] = (0..t)
            .min_by(|&a, &b| {
                let la = load[a].clone() / m.weights[a].clone();
                let lb = load[b].clone() / m.weights[b].clone();
                la.partial_cmp(&lb).expect("comparable").then(a.cmp(&b))
            })
            .expect("at least one part");
    }
    part
}

/// Backtracking over assignments in index order. Loads only grow as indices are
/// added, so a violated placed index prunes the branch.
fn exhaustive<S: Scalar>(m: &WeightMatrix<S>) -> Option<Vec<usize>> {
    fn rec<S: Scalar>(m: &WeightMatrix<S>, part: &mut Vec<usize>, bound: &[S]) -> bool {
        let v = part.len();
        if v == m.n {
            return true;
        }
        for q in 0..m.parts() {
            part.push(q);
            let ok = (0..=v).all(|i| {
                let r = part[i];
                let load = m.rows[i]
                    .iter()
                    .filter(|(j, _)| *j <= v && part[*j] == r)
                    .fold(S::zero(), |acc, (_, a)| acc + a.clone());
                load.le_tol(&bound[r])
            });
            if ok && rec(m, part, bound) {
                return true;
            }
            part.pop();
        }
        false
    }
    let bound: Vec<S> = m.weights.iter().map(|c| c.clone() + c.clone()).collect();
    let mut part = Vec::with_capacity(m.n);
    rec(m, &mut part, &bound).then_some(part)
}

/// Partition `(S_1..S_t)` with `sum_{j in S_r} a_ij <= 2 c_r` for every `i in S_r`.
pub fn alon_partition<S: Scalar>(m: &WeightMatrix<S>, budget: &AlonBudget) -> Result<Partition> {
    let (n, t) = (m.n, m.parts());
    let moves = budget.moves.unwrap_or(200 * (n as u64).pow(2)).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut spent = 0u64;
    for attempt in 0..budget.restarts.max(1) {
        let start = if attempt == 0 {
            greedy_start(m)
        } else {
            (0..n).map(|_| rng.gen_range(0..t)).collect()
        };
        let mut search = Search::new(m, start);
        let used = search.descend(moves);
        spent += used;
        let ok = search.repair(&mut rng, moves.saturating_sub(used));
        spent += moves.saturating_sub(used);
        if ok {
            let p = Partition::new(search.part, t)?;
            if m.is_valid_partition(&p) {
                return Ok(p);
            }
        }
    }
    if n <= budget.exhaustive_cap {
        if let Some(part) = exhaustive(m) {
            let p = Partition::new(part, t)?;
            if m.is_valid_partition(&p) {
                return Ok(p);
            }
        }
    }
    Err(Error::BudgetExhausted { steps: spent })
}
