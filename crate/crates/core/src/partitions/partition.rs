use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PartitionError;

/// An integer partition, stored without trailing zeros.
///
/// Reading a part beyond the length yields 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// A cell `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Build from parts, dropping zeros. Fails if the parts are not weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Sort arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` counted from 1; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `n` (`n` must be at least the length).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(1);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Multiplicity of the part `i` (for `i ≥ 1`).
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Pairs `(part, multiplicity)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn arm(&self, (i, j): Cell) -> usize {
        self.part(i) - j
    }

    pub fn leg(&self, (i, j): Cell) -> usize {
        self.conjugate().part(j) - i
    }

    pub fn coarm(&self, (_, j): Cell) -> usize {
        j - 1
    }

    pub fn coleg(&self, (i, _): Cell) -> usize {
        i - 1
    }

    /// All cells with `(arm, leg, coarm, coleg)`.
    pub fn cell_stats(&self) -> Vec<(Cell, CellStats)> {
        let c = self.conjugate();
        self.cells()
            .map(|(i, j)| {
                (
                    (i, j),
                    CellStats {
                        arm: self.part(i) - j,
                        leg: c.part(j) - i,
                        coarm: j - 1,
                        coleg: i - 1,
                    },
                )
            })
            .collect()
    }

    /// `λ_i ≥ μ_i` for all `i`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// `λ/μ` is a vertical strip: at most one box in each row.
    pub fn is_vertical_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (1..=self.len()).all(|i| self.part(i) - mu.part(i) <= 1)
    }

    /// `λ/μ` is a horizontal strip: at most one box in each column.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (1..=self.len()).all(|i| mu.part(i) >= self.part(i + 1))
    }

    /// Dominance `self ≤ other`; false for unequal sizes.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> num_bigint::BigInt {
        let mut z = num_bigint::BigInt::from(1);
        for (p, m) in self.multiplicities() {
            for k in 1..=m {
                z *= p * k;
            }
        }
        z
    }

    /// Concatenate parts and re-sort (the product `p_λ p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }

    /// Remove one part equal to `n`, if present.
    pub fn remove_part(&self, n: usize) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == n)?;
        let mut v = self.0.clone();
        v.remove(pos);
        Some(Partition(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

impl From<Vec<usize>> for Partition {
    /// Sorts and drops zeros.
    fn from(v: Vec<usize>) -> Self {
        Partition::from_unsorted(v)
    }
}

impl<const K: usize> From<[usize; K]> for Partition {
    fn from(v: [usize; K]) -> Self {
        Partition::from_unsorted(v.to_vec())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts, optionally parenthesized; empty string is `∅`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| PartitionError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
pub fn partitions_bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn rec(n: usize, max_len: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// All partitions with size at most `d` and length at most `max_len`, by size then reverse lex.
pub fn partitions_up_to(d: usize, max_len: usize) -> Vec<Partition> {
    (0..=d).flat_map(|n| partitions_bounded(n, max_len, n)).collect()
}

/// All partitions `μ ⊆ λ`.
pub fn subpartitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(lambda: &Partition, i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lambda.len() {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        for p in 0..=lambda.part(i).min(bound) {
            cur.push(p);
            rec(lambda, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn stats_of_small_shapes() {
        assert_eq!(Partition::empty().n(), 0);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let l = p(&[2, 1]);
        assert_eq!(l.conjugate(), l);
        assert_eq!(l.n(), 1);
        assert_eq!(l.conjugate().n(), 1);
        let m = p(&[3, 1]);
        let stats = m.cell_stats();
        let coarms: usize = stats.iter().map(|(_, s)| s.coarm).sum();
        let colegs: usize = stats.iter().map(|(_, s)| s.coleg).sum();
        assert_eq!(coarms, m.conjugate().n());
        assert_eq!(colegs, m.n());
    }

    #[test]
    fn strip_and_dominance_predicates() {
        assert!(p(&[2, 1]).is_vertical_strip_over(&p(&[1, 1])));
        assert!(!p(&[3, 1]).is_vertical_strip_over(&p(&[1, 1])));
        assert!(p(&[2, 2]).dominated_by(&p(&[3, 1])));
        assert!(!p(&[3, 1]).dominated_by(&p(&[2, 2])));
        assert!(p(&[3, 1]).is_horizontal_strip_over(&p(&[1])));
        assert!(!p(&[2, 2]).is_horizontal_strip_over(&p(&[1])));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
        assert_eq!(partitions_up_to(3, 2).len(), 6);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 2, 1]).to_string(), "(2,2,1)");
        assert_eq!(p(&[2, 1, 1]).z(), 4.into());
        assert_eq!(p(&[1, 1, 1]).z(), 6.into());
    }
}
