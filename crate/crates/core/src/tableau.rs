use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Partition, TabCell};
use crate::word::Word;

/// A skew tableau of shape `outer / inner` whose rows and columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncreasingTableau {
    inner: Partition,
    /// `rows[i]` holds the entries of row `i + 1` to the right of the inner shape.
    rows: Vec<Vec<usize>>,
}

impl IncreasingTableau {
    pub fn empty() -> Self {
        IncreasingTableau {
            inner: Partition::empty(),
            rows: vec![],
        }
    }

    pub fn new(inner: Partition, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.len() > inner.len() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        while rows.len() < inner.len() {
            rows.push(vec![]);
        }
        let outer: Vec<usize> = rows.iter().enumerate().map(|(i, r)| inner[i] + r.len()).collect();
        if Partition::new(outer.clone()).is_err() {
            return Err(Error::InvalidTableau(format!("row lengths {outer:?} do not form a skew shape")));
        }
        let t = IncreasingTableau { inner, rows };
        t.check_increasing()?;
        Ok(t)
    }

    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(Partition::empty(), rows)
    }

    pub(crate) fn from_parts_unchecked(inner: Partition, rows: Vec<Vec<usize>>) -> Self {
        let t = IncreasingTableau { inner, rows };
        debug_assert!(t.check_increasing().is_ok());
        t
    }

    fn check_increasing(&self) -> Result<()> {
        for (c, v) in self.entries() {
            if v == 0 {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            let left = self.get(TabCell::new(c.row, c.col.wrapping_sub(1)));
            let up = self.get(TabCell::new(c.row.wrapping_sub(1), c.col));
            if left.is_some_and(|l| l >= v) || up.is_some_and(|u| u >= v) {
                return Err(Error::InvalidTableau(format!("entry {v} at {c} breaks strict increase")));
            }
        }
        Ok(())
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> Partition {
        Partition::from_parts_unchecked(
            self.rows.iter().enumerate().map(|(i, r)| self.inner[i] + r.len()).collect(),
        )
    }

    /// Shape of a straight tableau.
    pub fn shape(&self) -> Partition {
        self.outer()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row `i` (0-based) as a slice of its skew entries.
    pub fn row(&self, i: usize) -> &[usize] {
        self.rows.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, c: TabCell) -> Option<usize> {
        if c.row == 0 || c.col == 0 || c.row > self.rows.len() {
            return None;
        }
        let start = self.inner.part(c.row);
        if c.col <= start {
            return None;
        }
        self.rows[c.row - 1].get(c.col - start - 1).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (TabCell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, r)| {
            let start = self.inner[i];
            r.iter()
                .enumerate()
                .map(move |(j, &v)| (TabCell::new(i + 1, start + j + 1), v))
        })
    }

    pub fn max_entry(&self) -> usize {
        self.entries().map(|(_, v)| v).max().unwrap_or(0)
    }

    /// Cells holding `v`.
    pub fn cells_with(&self, v: usize) -> Vec<TabCell> {
        self.entries().filter(|&(_, e)| e == v).map(|(c, _)| c).collect()
    }

    /// Applies `f` to every entry. `f` must preserve strict increase.
    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|&v| f(v)).collect()).collect();
        Self::from_parts_unchecked(self.inner.clone(), rows)
    }

    /// Restriction to entries `<= m`.
    pub fn restrict(&self, m: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().take_while(|&v| v <= m).collect())
            .collect();
        let mut t = Self::from_parts_unchecked(self.inner.clone(), rows);
        t.trim();
        t
    }

    /// The tableau of entries `> m`, sitting on the shape of the entries `<= m`.
    pub fn skew_above(&self, m: usize) -> Self {
        let lower = self.restrict(m);
        let inner = lower.outer();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| v > m).collect())
            .collect();
        let mut t = Self::from_parts_unchecked(inner, rows);
        t.trim();
        t
    }

    fn trim(&mut self) {
        while self.rows.len() > self.inner.len() && self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    /// Row-reading word: bottom row first, each row left to right.
    pub fn reading_word(&self) -> Word {
        let letters = self.rows.iter().rev().flatten().copied().collect();
        Word::new(letters).unwrap()
    }

    /// `chain[y]` is the shape of the entries `<= y` (including the inner shape), for `y` in `0..=h`.
    pub fn chain(&self, h: usize) -> Vec<Partition> {
        (0..=h).map(|y| self.restrict(y).outer()).collect()
    }

    /// Inverse of [`IncreasingTableau::chain`]: entry `y` fills `chain[y] / chain[y - 1]`,
    /// which must be a rook strip.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let inner = chain.first().cloned().unwrap_or_default();
        let outer = chain.last().cloned().unwrap_or_default();
        let mut rows: Vec<Vec<usize>> = vec![vec![]; outer.len()];
        for y in 1..chain.len() {
            if !chain[y].is_rook_strip_over(&chain[y - 1]) {
                return Err(Error::InvalidTableau(format!(
                    "{} / {} is not a rook strip",
                    chain[y],
                    chain[y - 1]
                )));
            }
            for c in chain[y].skew_boxes(&chain[y - 1]) {
                rows[c.row - 1].push(y);
            }
        }
        Self::new(inner, rows)
    }

    /// Every straight increasing tableau with at most `max_boxes` boxes and entries in `1..=max_entry`.
    pub fn enumerate_straight(max_boxes: usize, max_entry: usize) -> Vec<Self> {
        let mut out = vec![];
        let mut chain = vec![Partition::empty()];
        fn rec(chain: &mut Vec<Partition>, max_boxes: usize, max_entry: usize, out: &mut Vec<IncreasingTableau>) {
            if chain.len() == max_entry + 1 {
                out.push(IncreasingTableau::from_chain(chain).unwrap());
                return;
            }
            let cur = chain.last().unwrap().clone();
            let addable = cur.addable_rows();
            // every subset of addable corners with distinct columns is a rook strip
            for mask in 0u32..(1 << addable.len()) {
                let rows: Vec<usize> = (0..addable.len())
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| addable[i])
                    .collect();
                if cur.size() + rows.len() > max_boxes {
                    continue;
                }
                let mut parts = cur.parts().to_vec();
                for &r in &rows {
                    if r > parts.len() {
                        parts.push(0);
                    }
                    parts[r - 1] += 1;
                }
                let next = Partition::from_parts_unchecked(parts);
                chain.push(next);
                rec(chain, max_boxes, max_entry, out);
                chain.pop();
            }
        }
        rec(&mut chain, max_boxes, max_entry, &mut out);
        out
    }
}

impl fmt::Display for IncreasingTableau {
    /// Rows top to bottom separated by `/`, entries by `,`, inner cells as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut cells: Vec<String> = vec![".".into(); self.inner[i]];
                cells.extend(r.iter().map(|v| v.to_string()));
                cells.join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for IncreasingTableau {
    type Err = Error;

    /// Rows separated by `/` or newlines, entries by `,` or spaces, `.` for inner cells.
    fn from_str(s: &str) -> Result<Self> {
        let mut inner = vec![];
        let mut rows = vec![];
        for line in s.split(['/', '\n']).map(str::trim).filter(|l| !l.is_empty()) {
            let mut skip = 0;
            let mut row = vec![];
            for tok in line.split([',', ' ']).filter(|t| !t.is_empty()) {
                if tok == "." {
                    if !row.is_empty() {
                        return Err(Error::Parse(format!("inner cell after entries in {line:?}")));
                    }
                    skip += 1;
                } else {
                    row.push(
                        tok.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?,
                    );
                }
            }
            inner.push(skip);
            rows.push(row);
        }
        let inner = Partition::new(inner)?;
        IncreasingTableau::new(inner, rows)
    }
}

/// A straight tableau whose boxes hold nonempty sets of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    rows: Vec<Vec<Vec<usize>>>,
}

impl SetValuedTableau {
    pub fn new(rows: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape)?;
        if rows.iter().flatten().any(|s| s.is_empty()) {
            return Err(Error::InvalidTableau("empty box in set-valued tableau".into()));
        }
        Ok(SetValuedTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<Vec<usize>>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, c: TabCell) -> Option<&[usize]> {
        self.rows
            .get(c.row.wrapping_sub(1))?
            .get(c.col.wrapping_sub(1))
            .map(Vec::as_slice)
    }

    fn add(&mut self, c: TabCell, k: usize, new_box: bool) {
        if new_box {
            if c.row > self.rows.len() {
                self.rows.push(vec![]);
            }
            self.rows[c.row - 1].push(vec![k]);
        } else {
            self.rows[c.row - 1][c.col - 1].push(k);
        }
    }
}

impl fmt::Display for SetValuedTableau {
    /// Rows top to bottom separated by `/`, each box as `{a,b}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                        format!("{{{}}}", v.join(","))
                    })
                    .collect::<String>()
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Outcome of inserting one letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InsertStep {
    /// The box where the insertion terminated.
    pub cell: TabCell,
    /// Whether the shape grew.
    pub grew: bool,
}

/// Hecke row insertion of `x` into a straight increasing tableau.
pub fn hecke_insert(t: &IncreasingTableau, x: usize) -> Result<(IncreasingTableau, InsertStep)> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("Hecke insertion needs a straight tableau".into()));
    }
    if x == 0 {
        return Err(Error::InvalidWord("letters must be positive".into()));
    }
    let mut rows = t.rows.clone();
    let step = insert_rows(&mut rows, x);
    Ok((IncreasingTableau::from_parts_unchecked(Partition::empty(), rows), step))
}

fn insert_rows(rows: &mut Vec<Vec<usize>>, mut x: usize) -> InsertStep {
    let mut r = 0;
    loop {
        if r == rows.len() {
            // a bumped letter always fits at the start of a new row
            debug_assert!(r == 0 || rows[r - 1][0] < x);
            rows.push(vec![x]);
            return InsertStep {
                cell: TabCell::new(r + 1, 1),
                grew: true,
            };
        }
        let len = rows[r].len();
        let last = rows[r][len - 1];
        if x >= last {
            let fits = last < x && (r == 0 || (rows[r - 1].len() > len && rows[r - 1][len] < x));
            if fits {
                rows[r].push(x);
                return InsertStep {
                    cell: TabCell::new(r + 1, len + 1),
                    grew: true,
                };
            }
            let col = len - 1;
            let bottom = rows.iter().rposition(|row| row.len() > col).unwrap();
            return InsertStep {
                cell: TabCell::new(bottom + 1, col + 1),
                grew: false,
            };
        }
        let j = rows[r].iter().position(|&v| v > x).unwrap();
        let y = rows[r][j];
        let fits = (j == 0 || rows[r][j - 1] < x) && (r == 0 || rows[r - 1][j] < x);
        if fits {
            rows[r][j] = x;
        }
        x = y;
        r += 1;
    }
}

/// Result of inserting a whole word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeResult {
    pub insertion: IncreasingTableau,
    pub recording: SetValuedTableau,
    pub steps: Vec<InsertStep>,
}

/// Inserts `w` letter by letter into the empty tableau, recording step `k` in the box where it ended.
pub fn hecke_insert_word(w: &Word) -> HeckeResult {
    let mut rows = vec![];
    let mut q = SetValuedTableau::default();
    let mut steps = vec![];
    for (k, &x) in w.letters().iter().enumerate() {
        let step = insert_rows(&mut rows, x);
        q.add(step.cell, k + 1, step.grew);
        steps.push(step);
    }
    HeckeResult {
        insertion: IncreasingTableau::from_parts_unchecked(Partition::empty(), rows),
        recording: q,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{part, word};

    fn tab(s: &str) -> IncreasingTableau {
        s.parse().unwrap()
    }

    #[test]
    fn insert_without_growth() {
        let y = tab("1,2,3,5/3,4/4/5");
        let (z, step) = hecke_insert(&y, 2).unwrap();
        assert_eq!(z, y);
        assert_eq!(step, InsertStep { cell: TabCell::new(4, 1), grew: false });
    }

    #[test]
    fn insert_with_growth() {
        let y = tab("1,2,3,5/3,4/4/5");
        let (z, step) = hecke_insert(&y, 3).unwrap();
        assert_eq!(z, tab("1,2,3,5/3,4,5/4/5"));
        assert_eq!(step, InsertStep { cell: TabCell::new(2, 3), grew: true });
    }

    #[test]
    fn insert_words() {
        let r = hecke_insert_word(&word!("5433124235"));
        assert_eq!(r.insertion, tab("1,2,3,5/3,4/4/5"));
        assert_eq!(r.recording.to_string(), "{1}{6}{7}{10}/{2}{8,9}/{3,4}/{5}");
        assert_eq!(r.insertion.reading_word(), word!("54341235"));

        let r = hecke_insert_word(&word!("132123"));
        assert_eq!(r.insertion, tab("1,2,3/2/3"));
        assert_eq!(r.recording.to_string(), "{1}{2,5}{6}/{3}/{4}");
    }

    #[test]
    fn parse_display() {
        let t = tab(". . 1/. 1,3/2,3");
        assert_eq!(t.inner(), &part![2, 1]);
        assert_eq!(t.outer(), part![3, 3, 2]);
        assert_eq!(t.to_string(), ".,.,1/.,1,3/2,3");
        assert!("1,1".parse::<IncreasingTableau>().is_err());
        assert!("1,2/1".parse::<IncreasingTableau>().is_err());
        assert!("1/2,3".parse::<IncreasingTableau>().is_err());
    }

    #[test]
    fn chains() {
        let t = tab("1,2,3,6/2,4,5/4");
        let c = t.chain(6);
        assert_eq!(c[2], part![2, 1]);
        assert_eq!(IncreasingTableau::from_chain(&c).unwrap(), t);
        assert_eq!(t.restrict(3), tab("1,2,3/2"));
        assert_eq!(t.skew_above(3), tab(".,.,.,6/.,4,5/4"));
    }

    #[test]
    fn enumerate_small() {
        // entries in {1, 2}: empty, 1, 2, 12, 1/2, 12/2
        let all = IncreasingTableau::enumerate_straight(10, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(IncreasingTableau::enumerate_straight(1, 2).len(), 3);
    }
}
