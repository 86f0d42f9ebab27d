use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A box in English notation: `row` counted from the top, `col` from the left, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TabCell {
    pub row: usize,
    pub col: usize,
}

impl TabCell {
    pub fn new(row: usize, col: usize) -> Self {
        TabCell { row, col }
    }
}

impl fmt::Display for TabCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition. Parts are positive and weakly decreasing; the empty partition has no parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Trailing zeros are dropped; any other zero or increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 1-based part, 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.part(1);
        let parts = (1..=n)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, c: TabCell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Boxes of `self / inner`, row by row. Requires `inner ⊆ self`.
    pub fn skew_boxes(&self, inner: &Partition) -> Vec<TabCell> {
        let mut out = vec![];
        for r in 1..=self.len() {
            for c in inner.part(r) + 1..=self.part(r) {
                out.push(TabCell::new(r, c));
            }
        }
        out
    }

    /// `self / inner` has no two boxes in a common row or column.
    pub fn is_rook_strip_over(&self, inner: &Partition) -> bool {
        if !self.contains(inner) {
            return false;
        }
        let boxes = self.skew_boxes(inner);
        let mut cols: Vec<usize> = boxes.iter().map(|b| b.col).collect();
        cols.sort_unstable();
        cols.dedup();
        let mut rows: Vec<usize> = boxes.iter().map(|b| b.row).collect();
        rows.dedup();
        cols.len() == boxes.len() && rows.len() == boxes.len()
    }

    /// `self ⊇ inner` and they differ by at most one box.
    pub fn covers_or_equals(&self, inner: &Partition) -> bool {
        self.contains(inner) && self.size() <= inner.size() + 1
    }

    /// Adds a box at the end of row `row` (1-based), if the result is a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 {
            return None;
        }
        if row > 1 && self.part(row) + 1 > self.part(row - 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last box of row `row` (1-based), if the result is a partition.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) == self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        Some(Partition::from_parts_unchecked(parts))
    }

    /// Coordinatewise maximum.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (1..=n).map(|i| self.part(i).max(other.part(i))).collect(),
        }
    }

    /// Rows `i` where `(i, self_i + 1)` can be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.part(r) < self.part(r - 1))
            .collect()
    }

    /// Rows whose last box is a corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = vec![];
        rec(n, n, &mut vec![], &mut out);
        out
    }

    /// Compact notation: parts concatenated when all are single digits, `∅` for the empty partition.
    pub fn to_compact(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// 0-based, returns 0 past the end.
    fn index(&self, i: usize) -> &usize {
        const ZERO: usize = 0;
        self.parts.get(i).unwrap_or(&ZERO)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    /// Panics if `parts` is not weakly decreasing.
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("weakly decreasing parts")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: `part![4, 3, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Partition::from(&[$($x),+][..]) };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate() {
        assert_eq!(part![4, 2, 2, 1].conjugate(), part![4, 3, 1, 1]);
        assert_eq!(part![].conjugate(), part![]);
        for n in 0..9 {
            for p in Partition::all_of_size(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("-".parse::<Partition>().unwrap(), part![]);
        assert_eq!("4,3,1".parse::<Partition>().unwrap(), part![4, 3, 1]);
        assert_eq!(part![4, 3, 1].to_string(), "4,3,1");
        assert_eq!(part![].to_string(), "-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(part![3, 2, 1].to_compact(), "321");
        assert_eq!(part![12, 1].to_compact(), "12,1");
    }

    #[test]
    fn rook_strip() {
        assert!(part![2, 1].is_rook_strip_over(&part![1]));
        assert!(!part![2].is_rook_strip_over(&part![]));
        assert!(!part![1, 1].is_rook_strip_over(&part![]));
        assert!(part![3, 1].is_rook_strip_over(&part![2]));
        assert!(!part![3, 1].is_rook_strip_over(&part![2, 2]));
    }

    #[test]
    fn add_remove() {
        assert_eq!(part![2, 1].add_box(1), Some(part![3, 1]));
        assert_eq!(part![2, 1].add_box(2), Some(part![2, 2]));
        assert_eq!(part![2, 1].add_box(3), Some(part![2, 1, 1]));
        assert_eq!(part![2, 2].add_box(2), None);
        assert_eq!(part![2, 2].remove_box(1), None);
        assert_eq!(part![2, 2].remove_box(2), Some(part![2, 1]));
        assert_eq!(part![1].remove_box(1), Some(part![]));
        assert_eq!(part![3, 1].union(&part![2, 2, 1]), part![3, 2, 1]);
    }

    #[test]
    fn index_past_end() {
        let p = part![3, 1];
        assert_eq!(p[0], 3);
        assert_eq!(p[5], 0);
        assert_eq!(p.part(1), 3);
        assert_eq!(p.part(3), 0);
    }
}
