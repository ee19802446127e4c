//! Integer partitions and their box statistics.
//!
//! Cells are `(i, j)` with 1-based row `i` and column `j`. Partitions of the
//! same size are ordered reverse-lexicographically, so `partitions_of(3)` is
//! `[(3), (2,1), (1,1,1)]`; the total order sorts by size first.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Box statistics of a cell, together with the whole-diagram invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub arm: u32,
    pub leg: u32,
    pub nstat: u64,
    pub conjugate: Partition,
    pub zcent: BigInt,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1) as usize;
        let parts = (1..=w)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && (j as u32) <= self.part(i)
    }

    /// All cells, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    pub fn arm(&self, i: usize, j: usize) -> Result<u32> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutside(i, j));
        }
        Ok(self.part(i) - j as u32)
    }

    pub fn leg(&self, i: usize, j: usize) -> Result<u32> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutside(i, j));
        }
        let col = self.parts.iter().filter(|&&p| p as usize >= j).count();
        Ok((col - i) as u32)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum()
    }

    /// `(k, m_k)` for each distinct part, largest first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation of cycle type `λ`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (k, m) in self.multiplicities() {
            for i in 1..=m {
                z *= BigInt::from(k) * BigInt::from(i);
            }
        }
        z
    }

    pub fn stats(&self, i: usize, j: usize) -> Result<PartitionStats> {
        Ok(PartitionStats {
            arm: self.arm(i, j)?,
            leg: self.leg(i, j)?,
            nstat: self.n(),
            conjugate: self.conjugate(),
            zcent: self.z(),
        })
    }

    /// Dominance order: partial sums of `self` bound those of `o`.
    pub fn dominates(&self, o: &Partition) -> bool {
        if self.size() != o.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=self.len().max(o.len()) {
            a += self.part(i);
            b += o.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Diagram containment `o ⊆ self`.
    pub fn contains(&self, o: &Partition) -> bool {
        o.len() <= self.len() && (1..=o.len()).all(|i| o.part(i) <= self.part(i))
    }

    /// Partition with one extra part `k` inserted.
    pub fn with_part(&self, k: u32) -> Partition {
        let mut p = self.parts.clone();
        p.push(k);
        Partition::from_unsorted(p)
    }

    /// Union of parts (multiset sum).
    pub fn union(&self, o: &Partition) -> Partition {
        let mut p = self.parts.clone();
        p.extend_from_slice(&o.parts);
        Partition::from_unsorted(p)
    }
}

impl Ord for Partition {
    fn cmp(&self, o: &Self) -> Ordering {
        self.size()
            .cmp(&o.size())
            .then_with(|| o.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing parts, optionally in parentheses.
    /// The empty string, `()` and `0` denote the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Partition(format!("cannot read part {x:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, reverse-lexicographic.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size up to `n`, in the total order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3),
            vec![partition(&[3]), partition(&[2, 1]), partition(&[1, 1, 1])]
        );
        assert_eq!(partitions_of(5).len(), 7);
        let mut sorted = partitions_of(6);
        sorted.sort();
        assert_eq!(sorted, partitions_of(6));
    }

    #[test]
    fn stats_of_21() {
        let l = partition(&[2, 1]);
        let s = l.stats(1, 1).unwrap();
        assert_eq!((s.arm, s.leg, s.nstat), (1, 1, 1));
        assert_eq!(s.zcent, BigInt::from(2));
        assert!(l.stats(2, 2).is_err());
    }

    #[test]
    fn parsing_rejects_unsorted() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!("2,1".parse::<Partition>().unwrap(), partition(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
    }
}
