use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Assignment of each vertex to a part in `0..part_count`. Parts may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    part_of: Vec<usize>,
    part_count: usize,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    part_count: usize,
    part_of: Vec<usize>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(r: PartitionRepr) -> Result<Self> {
        Partition::new(r.part_of, r.part_count)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr {
            part_count: p.part_count,
            part_of: p.part_of,
        }
    }
}

impl Partition {
    pub fn new(part_of: Vec<usize>, part_count: usize) -> Result<Self> {
        if part_count == 0 {
            return Err(Error::InvalidPartition(
                "part count must be positive".into(),
            ));
        }
        if let Some((v, &p)) = part_of.iter().enumerate().find(|&(_, &p)| p >= part_count) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} assigned to part {p} but only {part_count} parts"
            )));
        }
        Ok(Partition {
            part_of,
            part_count,
        })
    }

    /// Part count is the smallest that fits the assignment.
    pub fn from_assignment(part_of: Vec<usize>) -> Self {
        let part_count = part_of.iter().max().map_or(1, |&m| m + 1);
        Partition {
            part_of,
            part_count,
        }
    }

    /// Builds a partition of `0..n` from explicit parts; every vertex exactly once.
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        let mut part_of = vec![usize::MAX; n];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Partition::new(part_of, parts.len().max(1))
    }

    /// Everything in one part.
    pub fn trivial(n: usize) -> Self {
        Partition {
            part_of: vec![0; n],
            part_count: 1,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            part_of: (0..n).collect(),
            part_count: n.max(1),
        }
    }

    /// Vertex `v` goes to part `v mod k`.
    pub fn round_robin(n: usize, k: usize) -> Self {
        assert!(k > 0, "round robin needs at least one part");
        Partition {
            part_of: (0..n).map(|v| v % k).collect(),
            part_count: k,
        }
    }

    pub fn part(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn part_count(&self) -> usize {
        self.part_count
    }

    pub fn len(&self) -> usize {
        self.part_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.part_of.is_empty()
    }

    pub fn assignment(&self) -> &[usize] {
        &self.part_of
    }

    /// Members of each part, sorted.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.part_count];
        for (v, &p) in self.part_of.iter().enumerate() {
            parts[p].push(v);
        }
        parts
    }

    pub fn nonempty_part_count(&self) -> usize {
        let mut used = vec![false; self.part_count];
        for &p in &self.part_of {
            used[p] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    /// Same grouping with empty parts dropped and parts numbered by first vertex.
    pub fn normalized(&self) -> Partition {
        let mut relabel = vec![usize::MAX; self.part_count];
        let mut next = 0;
        let part_of = self
            .part_of
            .iter()
            .map(|&p| {
                if relabel[p] == usize::MAX {
                    relabel[p] = next;
                    next += 1;
                }
                relabel[p]
            })
            .collect();
        Partition {
            part_of,
            part_count: next.max(1),
        }
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.part_of.len() != n {
            return Err(Error::PartitionMismatch {
                partition: self.part_of.len(),
                graph: n,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_validates() {
        let p = Partition::new(vec![0, 2, 1, 0], 3).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"part_count":3,"part_of":[0,2,1,0]}"#);
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Partition>(r#"{"part_count":1,"part_of":[0,1]}"#).is_err());
    }

    #[test]
    fn from_parts_requires_exact_cover() {
        assert!(Partition::from_parts(3, &[vec![0], vec![2]]).is_err());
        assert!(Partition::from_parts(2, &[vec![0, 1], vec![1]]).is_err());
        let p = Partition::from_parts(3, &[vec![2], vec![0, 1]]).unwrap();
        assert_eq!(p.assignment(), &[1, 1, 0]);
        assert_eq!(p.normalized().assignment(), &[0, 0, 1]);
    }
}
