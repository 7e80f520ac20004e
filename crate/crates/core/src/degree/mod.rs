//! Partitions that keep a share of every vertex's degree: majority colourings,
//! the Alon matrix lemma and what it gives for out/in- and semi-degrees, and the
//! 2k-partite minimum out-degree decision.

mod alon;

pub use alon::{alon_partition, AlonBudget, WeightMatrix};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::connectivity::terminal_components;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Partition};

pub type ExactWeightMatrix = WeightMatrix<BigRational>;
pub type FloatWeightMatrix = WeightMatrix<f64>;

fn q(num: usize, den: usize) -> BigRational {
    BigRational::new((num as i64).into(), (den as i64).into())
}

/// A rational written as a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rational {
    Int(i64),
    Text(String),
}

impl Rational {
    fn value(&self) -> Result<BigRational> {
        match self {
            Rational::Int(x) => Ok(BigRational::from_integer((*x).into())),
            Rational::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}"))),
        }
    }
}

/// On-disk weight matrix: `{"n": 3, "entries": [[0, 1, "1/2"], ...], "weights": ["1/2", "1/2"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<(usize, usize, Rational)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Rational>>,
}

impl MatrixFile {
    /// Without stored weights, `t` equal weights are used.
    pub fn into_matrix(self, t: Option<usize>) -> Result<ExactWeightMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|(i, j, a)| Ok((*i, *j, a.value()?)))
            .collect::<Result<Vec<_>>>()?;
        let weights = match (self.weights, t) {
            (Some(w), t) => {
                if t.is_some_and(|t| t != w.len()) {
                    return Err(Error::InvalidMatrix(format!(
                        "{} stored weights but t = {}",
                        w.len(),
                        t.unwrap()
                    )));
                }
                w.iter().map(Rational::value).collect::<Result<Vec<_>>>()?
            }
            (None, Some(t)) if t > 0 => ExactWeightMatrix::uniform_weights(t),
            (None, _) => return Err(Error::InvalidMatrix("no weights and no positive t".into())),
        };
        WeightMatrix::new(self.n, entries, weights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MajorityColouring {
    /// `(first, second)` colour of each vertex, each in `{1, 2}`.
    pub pairs: Vec<(u8, u8)>,
    /// `2 (first - 1) + (second - 1)`, in `0..4`.
    pub colours: Vec<usize>,
}

/// At most half of every vertex's out-arcs end at its own colour. Arcs are counted
/// with multiplicity.
pub fn is_majority_colouring(d: &Digraph, colours: &[usize]) -> bool {
    colours.len() == d.vertex_count()
        && (0..d.vertex_count()).all(|v| {
            let same = d
                .out_arcs(v)
                .iter()
                .filter(|&&(w, _)| colours[w] == colours[v])
                .count();
            2 * same <= d.out_degree(v)
        })
}

/// Two greedy 2-colourings, one over the vertices in id order looking back and one
/// in reverse looking forward. Colour 1 wins ties.
pub fn majority_4_colouring(d: &Digraph) -> Result<MajorityColouring> {
    let n = d.vertex_count();
    let pass = |order: &mut dyn Iterator<Item = usize>, earlier: &dyn Fn(usize, usize) -> bool| {
        let mut colour = vec![0u8; n];
        for v in order {
            let mut seen = [0usize; 3];
            for &(w, _) in d.out_arcs(v) {
                if earlier(w, v) {
                    seen[colour[w] as usize] += 1;
                }
            }
            colour[v] = if seen[1] <= seen[2] { 1 } else { 2 };
        }
        colour
    };
    let first = pass(&mut (0..n), &|w, v| w < v);
    let second = pass(&mut (0..n).rev(), &|w, v| w > v);
    let pairs: Vec<(u8, u8)> = first.into_iter().zip(second).collect();
    let colours: Vec<usize> = pairs
        .iter()
        .map(|&(a, b)| 2 * (a as usize - 1) + (b as usize - 1))
        .collect();
    if !is_majority_colouring(d, &colours) {
        return Err(Error::InternalInvariantViolation(
            "greedy passes left a majority violation".into(),
        ));
    }
    Ok(MajorityColouring { pairs, colours })
}

/// Matrix whose row `i` spreads weight `1/d^+(v_i)` over out-arcs for `i` in `X`
/// and `1/d^-(v_i)` over in-arcs otherwise. Parallel arcs add up.
pub fn out_in_matrix(d: &Digraph, in_x: &[bool], t: usize) -> Result<ExactWeightMatrix> {
    let n = d.vertex_count();
    let mut entries = Vec::new();
    for v in 0..n {
        if in_x[v] {
            let deg = d.out_degree(v);
            entries.extend(d.out_arcs(v).iter().map(|&(w, _)| (v, w, q(1, deg))));
        } else {
            let deg = d.in_degree(v);
            entries.extend(d.in_arcs(v).iter().map(|&(u, _)| (v, u, q(1, deg))));
        }
    }
    WeightMatrix::new(n, entries, WeightMatrix::uniform_weights(t))
}

/// Matrix for semi-degrees: `1/(2 d^+)` per out-arc plus `1/(2 d^-)` per in-arc.
pub fn semidegree_matrix(d: &Digraph, t: usize) -> Result<ExactWeightMatrix> {
    let n = d.vertex_count();
    let mut entries = Vec::new();
    for v in 0..n {
        let (dout, din) = (d.out_degree(v), d.in_degree(v));
        entries.extend(d.out_arcs(v).iter().map(|&(w, _)| (v, w, q(1, 2 * dout))));
        entries.extend(d.in_arcs(v).iter().map(|&(u, _)| (v, u, q(1, 2 * din))));
    }
    WeightMatrix::new(n, entries, WeightMatrix::uniform_weights(t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreePartition {
    pub partition: Partition,
    #[serde(skip)]
    pub subgraph: Digraph,
}

/// Three parts; vertices of `X` keep `ceil(d^+/3)` out-arcs, the rest `ceil(d^-/3)` in-arcs.
pub fn three_partition_out_in(
    d: &Digraph,
    x: &[usize],
    budget: &AlonBudget,
) -> Result<DegreePartition> {
    let n = d.vertex_count();
    let mut in_x = vec![false; n];
    for &v in x {
        if v >= n {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} out of range 0..{n}"
            )));
        }
        in_x[v] = true;
    }
    let m = out_in_matrix(d, &in_x, 3)?;
    let partition = alon_partition(&m, budget)?;
    let subgraph = d.partite_subgraph(&partition)?;
    if !meets_out_in_bound(d, &subgraph, &in_x) {
        return Err(Error::InternalInvariantViolation(
            "ceiling bound fails on a valid matrix partition".into(),
        ));
    }
    Ok(DegreePartition {
        partition,
        subgraph,
    })
}

/// `d^+_H(x) >= ceil(d^+_D(x)/3)` on `X`, the in-degree analogue elsewhere.
pub fn meets_out_in_bound(d: &Digraph, h: &Digraph, in_x: &[bool]) -> bool {
    (0..d.vertex_count()).all(|v| {
        if in_x[v] {
            h.out_degree(v) >= d.out_degree(v).div_ceil(3)
        } else {
            h.in_degree(v) >= d.in_degree(v).div_ceil(3)
        }
    })
}

/// `k d^0_H(v) >= (k - 4) d^0_D(v)` everywhere.
pub fn meets_semidegree_bound(d: &Digraph, h: &Digraph, k: usize) -> bool {
    (0..d.vertex_count()).all(|v| k * h.semi_degree(v) >= (k - 4) * d.semi_degree(v))
}

/// `k` parts, every vertex keeping a `(k-4)/k` share of both its in- and out-degree.
pub fn kpartite_semidegree(d: &Digraph, k: usize, budget: &AlonBudget) -> Result<DegreePartition> {
    if k < 5 {
        return Err(Error::BadK(format!("need k >= 5, got {k}")));
    }
    let m = semidegree_matrix(d, k)?;
    let partition = alon_partition(&m, budget)?;
    let subgraph = d.partite_subgraph(&partition)?;
    let n = d.vertex_count();
    // Share of each vertex's out- and in-arcs that stay inside its part.
    for v in 0..n {
        let r = partition.part(v);
        let inside_out = d
            .out_arcs(v)
            .iter()
            .filter(|&&(w, _)| partition.part(w) == r)
            .count();
        let inside_in = d
            .in_arcs(v)
            .iter()
            .filter(|&&(u, _)| partition.part(u) == r)
            .count();
        if k * inside_out > 4 * d.out_degree(v) || k * inside_in > 4 * d.in_degree(v) {
            return Err(Error::InternalInvariantViolation(format!(
                "vertex {v} keeps more than 4/{k} of its arcs inside its part"
            )));
        }
    }
    if !meets_semidegree_bound(d, &subgraph, k) {
        return Err(Error::InternalInvariantViolation(
            "semi-degree bound fails".into(),
        ));
    }
    Ok(DegreePartition {
        partition,
        subgraph,
    })
}

/// Six parts with `delta^0(H) >= floor(delta^0(D) / 3)`.
pub fn sixpartite_semidegree(d: &Digraph, budget: &AlonBudget) -> Result<DegreePartition> {
    let out = kpartite_semidegree(d, 6, budget)?;
    let r = d.min_semi_degree() / 3;
    if out.subgraph.min_semi_degree() < r {
        return Err(Error::InternalInvariantViolation(format!(
            "delta^0(H) below {r}"
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartiteDecision {
    pub exists: bool,
    /// A terminal strong component that is a k-regular tournament, when one exists.
    pub certificate: Option<Vec<usize>>,
    /// For `k = 1`, the 2-colouring found by search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
}

/// Largest digraph the `k = 1` search accepts.
pub const OUT_COLOURING_CAP: usize = 40;

/// Strong component `c` induces a tournament on `2k + 1` vertices with every
/// in- and out-degree equal to `k`.
fn is_regular_tournament(d: &Digraph, c: &[usize], k: usize) -> bool {
    if c.len() != 2 * k + 1 {
        return false;
    }
    let (sub, _) = d.induced(c);
    sub.is_tournament()
        && (0..sub.vertex_count()).all(|v| sub.out_degree(v) == k && sub.in_degree(v) == k)
}

/// Two colours such that every vertex has an out-neighbour of the other colour.
/// Backtracking in vertex order; a vertex is checked as soon as it and all its
/// out-neighbours are coloured.
fn out_colouring(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let outs: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbours(v)).collect();
    let mut check_at = vec![Vec::new(); n];
    for (v, out) in outs.iter().enumerate() {
        let last = out.iter().copied().fold(v, usize::max);
        check_at[last].push(v);
    }
    fn rec(i: usize, outs: &[Vec<usize>], check_at: &[Vec<usize>], colour: &mut [usize]) -> bool {
        if i == colour.len() {
            return true;
        }
        // Swapping colours is a symmetry, so vertex 0 takes colour 0.
        for c in 0..if i == 0 { 1 } else { 2 } {
            colour[i] = c;
            let fine = check_at[i]
                .iter()
                .all(|&v| outs[v].iter().any(|&w| colour[w] != colour[v]));
            if fine && rec(i + 1, outs, check_at, colour) {
                return true;
            }
        }
        colour[i] = usize::MAX;
        false
    }
    let mut colour = vec![usize::MAX; n];
    rec(0, &outs, &check_at, &mut colour).then_some(colour)
}

/// Whether `d` with `delta^+ >= k` has a spanning 2k-partite subdigraph keeping
/// `delta^+ >= k`. For `k >= 2` this holds exactly when no terminal strong
/// component is a k-regular tournament. For `k = 1` a terminal 3-cycle still
/// rules it out, but other digraphs fail too (two 3-cycles sharing an arc), so
/// the answer comes from an exact search, limited to [`OUT_COLOURING_CAP`] vertices.
pub fn decide_2k_partite_mindeg(d: &Digraph, k: usize) -> Result<PartiteDecision> {
    if k == 0 {
        return Err(Error::BadK("k must be at least 1".into()));
    }
    if d.vertex_count() == 0 || d.min_out_degree() < k {
        return Err(Error::PreconditionFailed(format!(
            "minimum out-degree is below {k}"
        )));
    }
    let bad = terminal_components(d)
        .into_iter()
        .find(|c| is_regular_tournament(d, c, k));
    if k >= 2 || bad.is_some() {
        return Ok(PartiteDecision {
            exists: bad.is_none(),
            certificate: bad,
            partition: None,
        });
    }
    let n = d.vertex_count();
    if n > OUT_COLOURING_CAP {
        return Err(Error::TooLarge(format!(
            "k = 1 needs an exact search; {n} vertices exceed {OUT_COLOURING_CAP}"
        )));
    }
    let colour = out_colouring(d);
    Ok(PartiteDecision {
        exists: colour.is_some(),
        certificate: None,
        partition: colour.map(|c| Partition::new(c, 2)).transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_power_digraph;

    #[test]
    fn majority_examples() {
        let empty = majority_4_colouring(&Digraph::empty(4)).unwrap();
        assert!(empty.pairs.iter().all(|&p| p == (1, 1)));
        for d in [
            Digraph::cycle(3).unwrap(),
            Digraph::transitive_tournament(5),
        ] {
            let c = majority_4_colouring(&d).unwrap();
            assert!(is_majority_colouring(&d, &c.colours));
            assert!(c.colours.iter().all(|&x| x < 4));
        }
        assert!(!is_majority_colouring(
            &Digraph::cycle(3).unwrap(),
            &[0, 0, 0]
        ));
    }

    #[test]
    fn matrix_file_parses_rationals() {
        let text = r#"{"n": 3, "entries": [[0, 1, "1/2"], [1, 2, 1], [2, 0, "1/3"]]}"#;
        let f: MatrixFile = serde_json::from_str(text).unwrap();
        let m = f.clone().into_matrix(Some(2)).unwrap();
        assert_eq!(m.entry(0, 1), q(1, 2));
        assert_eq!(m.parts(), 2);
        assert!(f.clone().into_matrix(None).is_err());
        let bad = r#"{"n": 2, "entries": [[0, 1, "x"]]}"#;
        let f: MatrixFile = serde_json::from_str(bad).unwrap();
        assert!(matches!(f.into_matrix(Some(2)), Err(Error::Parse(_))));
    }

    #[test]
    fn matrices_have_unit_rows() {
        let d = Digraph::new(3, vec![(0, 1), (0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        let m = semidegree_matrix(&d, 5).unwrap();
        let total = m.row(0).iter().fold(q(0, 1), |acc, (_, a)| acc + a.clone());
        assert_eq!(total, q(1, 1));
        assert_eq!(m.entry(0, 1), q(2, 6));
        let m = out_in_matrix(&d, &[true, false, true], 3).unwrap();
        assert_eq!(m.entry(1, 0), q(2, 2));
    }

    #[test]
    fn three_partition_examples() {
        let budget = AlonBudget::default();
        let c6 = Digraph::cycle(6).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let out = three_partition_out_in(&c6, &all, &budget).unwrap();
        assert!((0..6).all(|v| out.subgraph.out_degree(v) == 1));
        let tt4 = Digraph::transitive_tournament(4);
        let out = three_partition_out_in(&tt4, &[], &budget).unwrap();
        assert!(meets_out_in_bound(&tt4, &out.subgraph, &[false; 4]));
        let r5 = cycle_power_digraph(5, 2).unwrap();
        let out = three_partition_out_in(&r5, &[0, 1, 2, 3, 4], &budget).unwrap();
        assert!((0..5).all(|v| out.subgraph.out_degree(v) >= 1));
    }

    #[test]
    fn semidegree_examples() {
        let budget = AlonBudget::default();
        let k6 = Digraph::complete_biorientation(6);
        let out = kpartite_semidegree(&k6, 6, &budget).unwrap();
        assert!(out.subgraph.min_semi_degree() >= 2);
        let out = kpartite_semidegree(&Digraph::empty(4), 5, &budget).unwrap();
        assert_eq!(out.subgraph.arc_count(), 0);
        assert!(matches!(
            kpartite_semidegree(&k6, 4, &budget),
            Err(Error::BadK(_))
        ));
        let k10 = Digraph::complete_biorientation(10);
        let out = sixpartite_semidegree(&k10, &budget).unwrap();
        assert!(out.subgraph.min_semi_degree() >= 3);
    }

    #[test]
    fn decision_examples() {
        let r5 = cycle_power_digraph(5, 2).unwrap();
        let dec = decide_2k_partite_mindeg(&r5, 2).unwrap();
        assert!(!dec.exists);
        assert_eq!(dec.certificate, Some(vec![0, 1, 2, 3, 4]));

        let mut arcs = r5.arcs().to_vec();
        arcs.extend((0..5).map(|v| (5, v)));
        arcs.push((0, 5));
        let d = Digraph::new(6, arcs).unwrap();
        assert!(decide_2k_partite_mindeg(&d, 2).unwrap().exists);

        let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        arcs.extend((0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
        let d = Digraph::new(6, arcs).unwrap();
        let dec = decide_2k_partite_mindeg(&d, 1).unwrap();
        assert!(!dec.exists);
        assert_eq!(dec.certificate, Some(vec![3, 4, 5]));

        // Two 3-cycles sharing the arc 1->3: strong, not a tournament, still impossible.
        let d = Digraph::new(4, vec![(0, 1), (1, 3), (2, 1), (3, 0), (3, 2)]).unwrap();
        let dec = decide_2k_partite_mindeg(&d, 1).unwrap();
        assert!(!dec.exists && dec.certificate.is_none());

        let c4 = Digraph::cycle(4).unwrap();
        let p = decide_2k_partite_mindeg(&c4, 1).unwrap().partition.unwrap();
        assert_eq!(p.assignment(), &[0, 1, 0, 1]);

        assert!(matches!(
            decide_2k_partite_mindeg(&Digraph::path(3), 1),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
