//! Young diagrams, skew shapes, conjugation and the (p,q)-hook.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Normalized constructor for inputs already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length, 1-based; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows, written ℓ(P).
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of column `j` (1-based).
    pub fn column(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&f| f >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        Partition {
            parts: (1..=width).map(|j| self.column(j)).collect(),
        }
    }

    /// `true` iff `inner` sits inside `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.depth() <= self.depth()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The (p,q)-hook condition `f_{p+1} <= q`.
    pub fn in_hook(&self, p: usize, q: usize) -> bool {
        self.row(p + 1) <= q
    }

    /// The highest weight `F♯` of the gl(p|q) representation labelled by `self`.
    pub fn sharp(&self, p: usize, q: usize) -> Result<HookWeight> {
        if !self.in_hook(p, q) {
            return Err(Error::NotInHook {
                partition: self.clone(),
                p,
                q,
            });
        }
        let mut entries: Vec<usize> = (1..=p).map(|i| self.row(i)).collect();
        entries.extend((1..=q).map(|j| self.column(j).saturating_sub(p)));
        Ok(HookWeight { p, q, entries })
    }

    /// Boxes as 1-based `(row, column)` pairs in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Convenience macro-free constructor used heavily in tests: panics on bad input.
impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::from(&parts[..])
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// A straight shape `outer / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        row >= 1 && col > self.inner.row(row) && col <= self.outer.row(row)
    }

    /// Boxes of the skew diagram in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.outer.depth())
            .flat_map(move |i| (self.inner.row(i) + 1..=self.outer.row(i)).map(move |j| (i, j)))
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// The weight `F♯ = (f♯_1, …, f♯_{p+q})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HookWeight {
    p: usize,
    q: usize,
    entries: Vec<usize>,
}

impl HookWeight {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn even_part(&self) -> &[usize] {
        &self.entries[..self.p]
    }

    pub fn odd_part(&self) -> &[usize] {
        &self.entries[self.p..]
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }
}

impl fmt::Display for HookWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}; {})", join(self.even_part()), join(self.odd_part()))
    }
}

/// All partitions of `n`, largest first part first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions `E` with `inner ⊆ E ⊆ outer` and `|E| = size`, in
/// increasing lexicographic order of their parts.
pub fn partitions_between(inner: &Partition, outer: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        row: usize,
        inner: &Partition,
        outer: &Partition,
        rest: usize,
        cap: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > outer.depth() {
            if rest == 0 {
                out.push(Partition::from_sorted(prefix.clone()));
            }
            return;
        }
        // the remaining rows can hold at most this many boxes
        let room: usize = (row..=outer.depth()).map(|i| outer.row(i).min(cap)).sum();
        let floor: usize = (row..=outer.depth()).map(|i| inner.row(i)).sum();
        if rest > room || rest < floor {
            return;
        }
        let lo = inner.row(row);
        let hi = outer.row(row).min(cap).min(rest);
        for len in lo..=hi {
            prefix.push(len);
            go(row + 1, inner, outer, rest - len, len, prefix, out);
            prefix.pop();
        }
    }
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(1, inner, outer, size, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `size` in the (p,q)-hook with at most `max_rows` rows.
pub fn hook_partitions(size: usize, p: usize, q: usize, max_rows: usize) -> Vec<Partition> {
    partitions_of(size)
        .into_iter()
        .filter(|f| f.depth() <= max_rows && f.in_hook(p, q))
        .collect()
}

/// Sub-diagrams of `outer` of the given size lying in the (p,q)-hook.
pub fn hook_subdiagrams(outer: &Partition, size: usize, p: usize, q: usize) -> Vec<Partition> {
    partitions_between(&Partition::empty(), outer, size)
        .into_iter()
        .filter(|d| d.in_hook(p, q))
        .collect()
}

/// All weak compositions of `total` into exactly `len` parts, lexicographically
/// decreasing.
pub fn compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if slots == 1 {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=rest).rev() {
            prefix.push(first);
            go(rest - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            Partition::from([5, 4, 3, 3, 3, 3, 2]).conjugate(),
            Partition::from([7, 7, 6, 2, 1])
        );
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::from([1]).conjugate(), Partition::from([1]));
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(Partition::new(vec![1, 0, 0]).unwrap(), Partition::from([1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::empty().depth(), 0);
    }

    #[test]
    fn hook_examples() {
        assert!(Partition::from([2, 1]).in_hook(1, 1));
        assert!(!Partition::from([2, 2]).in_hook(1, 1));
        assert!(Partition::from([5, 4, 3, 3, 3, 3, 2]).in_hook(4, 4));
    }

    #[test]
    fn sharp_examples() {
        let w = Partition::from([2, 1]).sharp(1, 1).unwrap();
        assert_eq!(w.entries(), &[2, 1]);
        let w = Partition::from([1]).sharp(3, 2).unwrap();
        assert_eq!(w.entries(), &[1, 0, 0, 0, 0]);
        let w = Partition::from([5, 4, 3, 3, 3, 3, 2]).sharp(4, 4).unwrap();
        assert_eq!(w.entries(), &[5, 4, 3, 3, 3, 3, 2, 0]);
        assert!(Partition::from([2, 2]).sharp(1, 1).is_err());
    }

    #[test]
    fn containment() {
        let e = Partition::from([3, 3, 3, 3, 2, 1, 1]);
        assert!(e.contains(&Partition::from([3, 3, 2, 2, 1])));
        assert!(e.contains(&e));
        assert!(!Partition::from([1, 1]).contains(&Partition::from([2])));
    }

    #[test]
    fn text_round_trip() {
        let f: Partition = "5,4,3,3,3,3,2".parse().unwrap();
        assert_eq!(f.to_string(), "5,4,3,3,3,3,2");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn partitions_between_is_lexicographic() {
        let all = partitions_between(&Partition::from([1]), &Partition::from([2, 2]), 3);
        assert_eq!(all, vec![Partition::from([2, 1])]);
        let all = partitions_between(&Partition::empty(), &Partition::from([2, 2]), 2);
        assert_eq!(all, vec![Partition::from([1, 1]), Partition::from([2])]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0usize..7, 0..7).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_involutive(f in arb_partition()) {
            prop_assert_eq!(f.conjugate().conjugate(), f.clone());
            prop_assert_eq!(f.conjugate().size(), f.size());
        }

        #[test]
        fn hook_degenerate_cases(f in arb_partition(), p in 0usize..5, q in 0usize..5) {
            prop_assert_eq!(f.in_hook(p, 0), f.depth() <= p);
            prop_assert_eq!(f.in_hook(0, q), f.row(1) <= q);
        }

        #[test]
        fn sharp_blocks_are_decreasing(f in arb_partition(), p in 0usize..5, q in 0usize..5) {
            if let Ok(w) = f.sharp(p, q) {
                prop_assert!(w.even_part().windows(2).all(|x| x[0] >= x[1]));
                prop_assert!(w.odd_part().windows(2).all(|x| x[0] >= x[1]));
                if f.depth() <= p {
                    prop_assert!(w.odd_part().iter().all(|&x| x == 0));
                    prop_assert_eq!(&w.even_part()[..f.depth()], f.parts());
                }
            }
        }
    }
}
