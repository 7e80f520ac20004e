//! A 2k-strong digraph with minimum out-degree 2k in which every 3-partition
//! leaves some vertex with at most k out- or in-neighbours across.

use serde::Serialize;

use crate::connectivity::is_k_strong;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Partition};

/// Strata of a class-D digraph; all entries are vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDLayout {
    pub k: usize,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub v3: Vec<usize>,
    pub v4: Vec<usize>,
    pub blocks: Vec<WBlock>,
}

/// Everything hanging off one `k`-subset `W` of `V_4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WBlock {
    pub w: Vec<usize>,
    /// `R_W`, `2k - 1` vertices of `V_3`.
    pub r: Vec<usize>,
    pub u_blocks: Vec<UBlock>,
}

/// One `k`-subset `U` of `R_W` with its `S_{W,U}` (in `V_2`) and `T_{W,U}` (in `V_1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UBlock {
    pub u: Vec<usize>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
pub(crate) fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(pos) = (0..k).rev().find(|&p| idx[p] != p + items.len() - k) else {
            return out;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// `count` entries of `pool` starting at position `offset`, cyclically.
fn rotate_pick(pool: &[usize], offset: usize, count: usize) -> Vec<usize> {
    (0..count)
        .map(|i| pool[(offset + i) % pool.len()])
        .collect()
}

/// The class-D digraph for `k >= 2` and its layout. Top-up arcs (from `V_3` into
/// `V_4`, and from `V_4` into `V_1`) use vertices of `V_4 \ W`, taken cyclically
/// from an offset equal to the vertex's position in its block.
pub fn class_d(k: usize) -> Result<(Digraph, ClassDLayout)> {
    if k < 2 {
        return Err(Error::BadK(format!("class D needs k >= 2, got {k}")));
    }
    let mut next = 0;
    let mut fresh = |count: usize| {
        let ids: Vec<usize> = (next..next + count).collect();
        next += count;
        ids
    };
    let v4 = fresh(3 * k - 2);
    let w_sets = subsets(&v4, k);
    let mut blocks: Vec<WBlock> = w_sets
        .into_iter()
        .map(|w| WBlock {
            w,
            r: Vec::new(),
            u_blocks: Vec::new(),
        })
        .collect();
    for b in &mut blocks {
        b.r = fresh(2 * k - 1);
    }
    for b in &mut blocks {
        b.u_blocks = subsets(&b.r, k)
            .into_iter()
            .map(|u| UBlock {
                u,
                s: Vec::new(),
                t: Vec::new(),
            })
            .collect();
    }
    for b in &mut blocks {
        for ub in &mut b.u_blocks {
            ub.s = fresh(k);
        }
    }
    for b in &mut blocks {
        for ub in &mut b.u_blocks {
            ub.t = fresh(2 * k);
        }
    }
    let n = next;
    let collect =
        |f: &dyn Fn(&WBlock) -> Vec<usize>| -> Vec<usize> { blocks.iter().flat_map(f).collect() };
    let v3 = collect(&|b| b.r.clone());
    let v2 = collect(&|b| b.u_blocks.iter().flat_map(|u| u.s.clone()).collect());
    let v1 = collect(&|b| b.u_blocks.iter().flat_map(|u| u.t.clone()).collect());

    let mut arcs = Vec::new();
    for b in &blocks {
        let outside: Vec<usize> = v4.iter().copied().filter(|v| !b.w.contains(v)).collect();
        for (j, &r) in b.r.iter().enumerate() {
            arcs.extend(b.w.iter().map(|&w| (r, w)));
            arcs.extend(rotate_pick(&outside, j, k).into_iter().map(|x| (r, x)));
        }
        for ub in &b.u_blocks {
            for &s in &ub.s {
                arcs.extend(b.w.iter().chain(&ub.u).map(|&x| (s, x)));
            }
            for (j, &t) in ub.t.iter().enumerate() {
                arcs.extend(ub.s.iter().chain(&ub.u).map(|&x| (t, x)));
                arcs.extend(b.w.iter().map(|&w| (w, t)));
                arcs.extend(rotate_pick(&outside, j, k).into_iter().map(|x| (x, t)));
            }
        }
    }
    for &x in &v4 {
        arcs.extend(v2.iter().chain(&v3).map(|&y| (x, y)));
    }
    let d = Digraph::new(n, arcs)?;
    let layout = ClassDLayout {
        k,
        v1,
        v2,
        v3,
        v4,
        blocks,
    };
    check_class_d(&d, &layout)?;
    Ok((d, layout))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strata sizes, the exact out-degrees `2k` on `V_1 ∪ V_2 ∪ V_3`, in-degree `2k`
/// on `V_1` with distinct in-neighbours, and simplicity.
fn check_class_d(d: &Digraph, l: &ClassDLayout) -> Result<()> {
    let k = l.k;
    let base = binomial(2 * k - 1, k) * binomial(3 * k - 2, k);
    let sizes = [l.v1.len(), l.v2.len(), l.v3.len(), l.v4.len()];
    let expected = [
        2 * k * base,
        k * base,
        (2 * k - 1) * binomial(3 * k - 2, k),
        3 * k - 2,
    ];
    if sizes != expected {
        return Err(Error::InternalInvariantViolation(format!(
            "strata sizes {sizes:?}, expected {expected:?}"
        )));
    }
    let arcs = d.arc_multiset();
    if arcs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InternalInvariantViolation(
            "parallel arcs in class D".into(),
        ));
    }
    let bad_out =
        l.v1.iter()
            .chain(&l.v2)
            .chain(&l.v3)
            .find(|&&v| d.out_degree(v) != 2 * k);
    let bad_in = l.v1.iter().find(|&&v| d.in_degree(v) != 2 * k);
    if let Some(v) = bad_out.or(bad_in) {
        return Err(Error::InternalInvariantViolation(format!(
            "vertex {v} has the wrong degree"
        )));
    }
    Ok(())
}

/// `is_k_strong(d, 2k)`, kept separate since it is the slow check.
pub fn class_d_is_2k_strong(d: &Digraph, layout: &ClassDLayout) -> bool {
    is_k_strong(d, 2 * layout.k)
}

/// A vertex with at most `k` out- or in-neighbours outside its own part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDViolation {
    pub vertex: usize,
    pub out_across: usize,
    pub in_across: usize,
    /// Which link of the argument produced it: `R_W`, `S_WU`, `T_WU`.
    pub stage: &'static str,
}

fn across(d: &Digraph, p: &Partition, v: usize) -> (usize, usize) {
    let out = d
        .out_arcs(v)
        .iter()
        .filter(|&&(w, _)| p.part(w) != p.part(v))
        .count();
    let inc = d
        .in_arcs(v)
        .iter()
        .filter(|&&(u, _)| p.part(u) != p.part(v))
        .count();
    (out, inc)
}

/// Follows the impossibility argument for a given partition into at most three parts.
pub fn class_d_refuter(
    d: &Digraph,
    layout: &ClassDLayout,
    p: &Partition,
) -> Result<ClassDViolation> {
    p.check_len(d.vertex_count())?;
    if p.part_count() > 3 {
        return Err(Error::BadParameters(format!(
            "refuter takes at most 3 parts, got {}",
            p.part_count()
        )));
    }
    let k = layout.k;
    let certify = |v: usize, stage: &'static str| -> Result<ClassDViolation> {
        let (out_across, in_across) = across(d, p, v);
        if out_across <= k || in_across <= k {
            Ok(ClassDViolation {
                vertex: v,
                out_across,
                in_across,
                stage,
            })
        } else {
            Err(Error::NoViolation)
        }
    };
    // Some part holds k vertices of V_4; call their set W.
    let p1 = (0..p.part_count())
        .find(|&q| layout.v4.iter().filter(|&&v| p.part(v) == q).count() >= k)
        .ok_or(Error::NoViolation)?;
    let w: Vec<usize> = layout
        .v4
        .iter()
        .copied()
        .filter(|&v| p.part(v) == p1)
        .take(k)
        .collect();
    let block = layout
        .blocks
        .iter()
        .find(|b| b.w == w)
        .ok_or(Error::NoViolation)?;
    if let Some(&r) = block.r.iter().find(|&&r| p.part(r) == p1) {
        return certify(r, "R_W");
    }
    // R_W avoids P_1, so k of its vertices share another part; call them U.
    let p2 = (0..p.part_count())
        .find(|&q| block.r.iter().filter(|&&v| p.part(v) == q).count() >= k)
        .ok_or(Error::NoViolation)?;
    let u: Vec<usize> = block
        .r
        .iter()
        .copied()
        .filter(|&v| p.part(v) == p2)
        .take(k)
        .collect();
    let ub = block
        .u_blocks
        .iter()
        .find(|b| b.u == u)
        .ok_or(Error::NoViolation)?;
    if let Some(&s) = ub.s.iter().find(|&&s| p.part(s) == p1 || p.part(s) == p2) {
        return certify(s, "S_WU");
    }
    // S_{W,U} lies in the third part; any t is stuck whichever part it is in.
    certify(ub.t[0], "T_WU")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_order() {
        assert_eq!(
            subsets(&[5, 6, 7], 2),
            vec![vec![5, 6], vec![5, 7], vec![6, 7]]
        );
        assert_eq!(subsets(&[1, 2, 3, 4], 2).len(), 6);
        assert_eq!(subsets(&[1], 2), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn k2_sizes_and_degrees() {
        let (d, l) = class_d(2).unwrap();
        assert_eq!(
            (l.v1.len(), l.v2.len(), l.v3.len(), l.v4.len()),
            (72, 36, 18, 4)
        );
        assert_eq!(d.vertex_count(), 130);
        assert!(l
            .v1
            .iter()
            .chain(&l.v2)
            .chain(&l.v3)
            .all(|&v| d.out_degree(v) == 4));
        assert!(l.v1.iter().all(|&v| d.in_degree(v) == 4));
        // V_2 in-degree 5k - 2.
        assert!(l.v2.iter().all(|&v| d.in_degree(v) == 8));
        assert_eq!(
            class_d(1).unwrap_err(),
            Error::BadK("class D needs k >= 2, got 1".into())
        );
    }

    #[test]
    fn refuter_on_fixed_partitions() {
        let (d, l) = class_d(2).unwrap();
        let one = Partition::new(vec![0; d.vertex_count()], 3).unwrap();
        let v = class_d_refuter(&d, &l, &one).unwrap();
        assert_eq!(v.stage, "R_W");
        assert_eq!(v.out_across, 0);
        let mut part_of = vec![0; d.vertex_count()];
        for &v in &l.v3 {
            part_of[v] = 1;
        }
        for &v in l.v2.iter().chain(&l.v1) {
            part_of[v] = 2;
        }
        let strata = Partition::new(part_of, 3).unwrap();
        let v = class_d_refuter(&d, &l, &strata).unwrap();
        assert_eq!(v.stage, "T_WU");
        assert!(v.out_across <= 2 || v.in_across <= 2);
    }
}
