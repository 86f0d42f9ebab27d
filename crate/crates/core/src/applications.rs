//! Chains in fillings, the ne/se symmetry, and linked partitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::growth::{grow_stack, shrink_stack, BoundaryLabel};
use crate::partition::Partition;
use crate::shape::{FillCell, StackFilling, StackPolyomino};
use crate::tableau::hecke_insert_word;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    NorthEast,
    SouthEast,
}

/// Longest chain whose bounding rectangle lies in the shape. Any chain sits inside the rectangle
/// spanned by its first and last 1, so it is enough to test that pair.
fn longest_chain(f: &StackFilling, dir: Direction) -> usize {
    let ones = f.ones();
    let shape = f.shape();
    let before = |p: &FillCell, q: &FillCell| {
        q.col > p.col
            && match dir {
                Direction::NorthEast => q.row > p.row,
                Direction::SouthEast => q.row < p.row,
            }
    };
    let mut best = 0;
    for (s, start) in ones.iter().enumerate() {
        let mut len = vec![0usize; ones.len()];
        len[s] = 1;
        for q in s + 1..ones.len() {
            len[q] = (s..q)
                .filter(|&r| len[r] > 0 && before(&ones[r], &ones[q]))
                .map(|r| len[r] + 1)
                .max()
                .unwrap_or(0);
        }
        for (q, end) in ones.iter().enumerate().skip(s) {
            let (lo, hi) = (start.row.min(end.row), start.row.max(end.row));
            if len[q] > best && shape.contains_rect(start.col, end.col, lo, hi) {
                best = len[q];
            }
        }
    }
    best
}

/// Length of the longest chain of 1s, each strictly north-east of the previous, whose bounding
/// rectangle lies in the shape.
pub fn longest_ne_chain(f: &StackFilling) -> usize {
    longest_chain(f, Direction::NorthEast)
}

/// As [`longest_ne_chain`], going south-east.
pub fn longest_se_chain(f: &StackFilling) -> usize {
    longest_chain(f, Direction::SouthEast)
}

/// Conjugates every partition of a label.
pub fn conjugate_label(l: &BoundaryLabel) -> BoundaryLabel {
    l.conjugate()
}

/// Conjugates the grown boundary and shrinks it again: swaps the longest ne and se chain lengths
/// while keeping the occupied rows and columns.
pub fn symmetry_involution(f: &StackFilling) -> Result<StackFilling> {
    let b = grow_stack(f)?.boundary();
    shrink_stack(f.shape(), &b.conjugate())
}

/// `(number of 1s, ne, se)` for every filling, counted.
pub type ChainHistogram = BTreeMap<(usize, usize, usize), u64>;

pub fn chain_histogram<'a>(fillings: impl IntoIterator<Item = &'a StackFilling>) -> ChainHistogram {
    let mut h = ChainHistogram::new();
    for f in fillings {
        let key = (f.ones().len(), longest_ne_chain(f), longest_se_chain(f));
        *h.entry(key).or_default() += 1;
    }
    h
}

/// Whether swapping ne and se maps the histogram to itself.
pub fn histogram_is_symmetric(h: &ChainHistogram) -> bool {
    h.iter().all(|(&(k, ne, se), c)| h.get(&(k, se, ne)) == Some(c))
}

/// CSV with header `shape,ones,ne,se,count`; the shape is quoted because it contains commas.
pub fn histogram_csv(shape: &StackPolyomino, h: &ChainHistogram) -> String {
    let mut out = String::from("shape,ones,ne,se,count\n");
    for (&(k, ne, se), c) in h {
        out.push_str(&format!("\"{shape}\",{k},{ne},{se},{c}\n"));
    }
    out
}

/// What the growth diagram says at one boundary corner, next to the word of the largest rectangle below-left of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerCheck {
    pub corner: (usize, usize),
    pub label: Partition,
    pub word: Word,
    pub insertion_shape: Partition,
    pub lis: usize,
    pub lds: usize,
}

impl CornerCheck {
    /// First row is the longest increasing subsequence and first column the longest decreasing one.
    pub fn chains_match(&self) -> bool {
        self.label.part(1) == self.lis && self.label.len() == self.lds
    }
}

/// One check per boundary corner with `x >= 1`, using the last partition of the label.
pub fn corner_checks(f: &StackFilling, lis: impl Fn(&Word) -> usize, lds: impl Fn(&Word) -> usize) -> Result<Vec<CornerCheck>> {
    let d = grow_stack(f)?;
    let shape = f.shape();
    let boundary = d.boundary();
    let mut out = vec![];
    for (&(x, y), lab) in shape.boundary_corners().iter().zip(&boundary.0) {
        if x == 0 {
            continue;
        }
        let word = match shape.largest_rectangle(x, y) {
            Some((r1, r2)) => f.rectangle_word(x, r1, r2),
            None => Word::default(),
        };
        out.push(CornerCheck {
            corner: (x, y),
            label: lab.last().clone(),
            insertion_shape: hecke_insert_word(&word).insertion.shape(),
            lis: lis(&word),
            lds: lds(&word),
            word,
        });
    }
    Ok(out)
}

/// A linked partition of `[n]`: blocks cover `[n]` and any two are nearly disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkedPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl LinkedPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        blocks.sort();
        let bad = |m: String| Err(Error::Constraint(m));
        if blocks.iter().any(Vec::is_empty) {
            return bad("empty block".into());
        }
        let covered: BTreeSet<usize> = blocks.iter().flatten().copied().collect();
        if covered != (1..=n).collect() {
            return bad(format!("blocks do not cover exactly 1..={n}"));
        }
        for (a, b1) in blocks.iter().enumerate() {
            for b2 in &blocks[a + 1..] {
                for t in b1.iter().filter(|t| b2.contains(t)) {
                    let ok = |x: &Vec<usize>, y: &Vec<usize>| *t == x[0] && x.len() > 1 && *t != y[0];
                    if !(ok(b1, b2) || ok(b2, b1)) {
                        return bad(format!("blocks {b1:?} and {b2:?} are not nearly disjoint"));
                    }
                }
            }
        }
        Ok(LinkedPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Standard representation: `(min B, x)` for every other `x` in every block `B`.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| b[1..].iter().map(move |&x| (b[0], x)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Inverse of [`LinkedPartition::arcs`]; elements on no arc become singletons.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for &(i, j) in arcs {
            if i == 0 || i >= j || j > n {
                return Err(Error::Constraint(format!("arc ({i},{j}) is not a pair i < j in 1..={n}")));
            }
            if !seen.insert(j) {
                return Err(Error::Constraint(format!("{j} is the right end of two arcs")));
            }
            blocks.entry(i).or_insert_with(|| vec![i]).push(j);
        }
        let on_arc: BTreeSet<usize> = arcs.iter().flat_map(|&(i, j)| [i, j]).collect();
        let mut all: Vec<Vec<usize>> = blocks.into_values().collect();
        all.extend((1..=n).filter(|k| !on_arc.contains(k)).map(|k| vec![k]));
        LinkedPartition::new(n, all)
    }

    /// Largest `k` with arcs `i_1 < ... < i_k < j_1 < ... < j_k`.
    pub fn cross(&self) -> usize {
        self.longest(|a, b| b.0 > a.0 && b.1 > a.1, |first, last| last.0 < first.1)
    }

    /// Largest `k` with arcs `i_1 < ... < i_k < j_k < ... < j_1`.
    pub fn nest(&self) -> usize {
        self.longest(|a, b| b.0 > a.0 && b.1 < a.1, |_, _| true)
    }

    /// Longest sequence related step by step by `step` whose ends satisfy `ends`.
    fn longest(
        &self,
        step: impl Fn((usize, usize), (usize, usize)) -> bool,
        ends: impl Fn((usize, usize), (usize, usize)) -> bool,
    ) -> usize {
        let arcs = self.arcs();
        let mut best = 0;
        for s in 0..arcs.len() {
            let mut len = vec![0usize; arcs.len()];
            len[s] = 1;
            for q in s + 1..arcs.len() {
                len[q] = (s..q)
                    .filter(|&r| len[r] > 0 && step(arcs[r], arcs[q]))
                    .map(|r| len[r] + 1)
                    .max()
                    .unwrap_or(0);
            }
            for q in s..arcs.len() {
                if len[q] > best && ends(arcs[s], arcs[q]) {
                    best = len[q];
                }
            }
        }
        best
    }

    /// Left ends of the arcs.
    pub fn compl(&self) -> BTreeSet<usize> {
        self.arcs().iter().map(|a| a.0).collect()
    }

    /// Right ends of the arcs.
    pub fn compr(&self) -> BTreeSet<usize> {
        self.arcs().iter().map(|a| a.1).collect()
    }

    /// The filling of the staircase with `n - 1` bottom cells: arc `(i, j)` becomes a 1 in row `i`,
    /// column `n + 1 - j`.
    pub fn to_triangle(&self) -> StackFilling {
        let shape = StackPolyomino::staircase(self.n);
        let cells: Vec<FillCell> = self
            .arcs()
            .iter()
            .map(|&(i, j)| FillCell::new(self.n + 1 - j, i))
            .collect();
        StackFilling::from_cells(shape, &cells).expect("arcs fit the staircase")
    }

    pub fn from_triangle(f: &StackFilling) -> Result<Self> {
        let n = f.shape().nrows() + 1;
        if *f.shape() != StackPolyomino::staircase(n) {
            return Err(Error::InvalidShape(format!("{} is not a staircase", f.shape())));
        }
        let arcs: Vec<(usize, usize)> = f.ones().iter().map(|c| (c.row, n + 1 - c.col)).collect();
        LinkedPartition::from_arcs(n, &arcs)
    }

    /// All linked partitions of `[n]`, through the staircase fillings.
    pub fn all(n: usize) -> Vec<LinkedPartition> {
        let shape = StackPolyomino::staircase(n);
        crate::oracle::enumerate_fillings(&shape, u128::MAX)
            .expect("no cap")
            .map(|f| LinkedPartition::from_triangle(&f).expect("staircase filling"))
            .collect()
    }
}

impl fmt::Display for LinkedPartition {
    /// `1 3 6; 2 5 8; 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", s.join("; "))
    }
}

impl FromStr for LinkedPartition {
    type Err = Error;

    /// Semicolon separated blocks of space or comma separated integers; `n` is the largest element.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(';')
            .map(str::trim)
            .filter(|b| !b.is_empty())
            .map(|b| {
                b.split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad element {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        LinkedPartition::new(n, blocks)
    }
}
