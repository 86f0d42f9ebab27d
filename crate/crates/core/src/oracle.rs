//! Slow, obviously correct references used to cross-check the fast code.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::shape::{FillCell, StackFilling, StackPolyomino};
use crate::word::Word;

/// Enumeration cap used when none is given.
pub const DEFAULT_CAP: u128 = 5_000_000;

/// Words expanded by [`kknuth_equivalent_default`].
pub const DEFAULT_KKNUTH_STEPS: usize = 100_000;

fn monotone_subset(letters: &[usize], mask: u64, increasing: bool) -> bool {
    let mut prev: Option<usize> = None;
    for (i, &a) in letters.iter().enumerate() {
        if mask & (1 << i) == 0 {
            continue;
        }
        if let Some(p) = prev {
            if (increasing && a <= p) || (!increasing && a >= p) {
                return false;
            }
        }
        prev = Some(a);
    }
    true
}

fn brute_longest(w: &Word, increasing: bool) -> usize {
    let letters = w.letters();
    assert!(letters.len() <= 24, "subset enumeration is limited to 24 letters");
    (0u64..1 << letters.len())
        .filter(|&m| monotone_subset(letters, m, increasing))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Longest strictly increasing subsequence, by trying every subsequence. At most 24 letters.
pub fn brute_lis(w: &Word) -> usize {
    brute_longest(w, true)
}

/// Longest strictly decreasing subsequence, by trying every subsequence. At most 24 letters.
pub fn brute_lds(w: &Word) -> usize {
    brute_longest(w, false)
}

fn dp_longest(w: &Word, increasing: bool) -> usize {
    let a = w.letters();
    let mut len = vec![1usize; a.len()];
    for i in 0..a.len() {
        for j in 0..i {
            let ok = if increasing { a[j] < a[i] } else { a[j] > a[i] };
            if ok {
                len[i] = len[i].max(len[j] + 1);
            }
        }
    }
    len.into_iter().max().unwrap_or(0)
}

/// Longest strictly increasing subsequence, quadratic dynamic programming.
pub fn lis(w: &Word) -> usize {
    dp_longest(w, true)
}

/// Longest strictly decreasing subsequence, quadratic dynamic programming.
pub fn lds(w: &Word) -> usize {
    dp_longest(w, false)
}

/// Longest ne and se chains by checking every subset of 1s. At most 20 ones.
pub fn brute_chains(f: &StackFilling) -> (usize, usize) {
    let ones = f.ones();
    assert!(ones.len() <= 20, "subset enumeration is limited to 20 ones");
    let shape = f.shape();
    let mut best = (0, 0);
    for mask in 1u32..1 << ones.len() {
        let chosen: Vec<FillCell> = (0..ones.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| ones[i])
            .collect();
        let k = chosen.len();
        let rows: Vec<usize> = chosen.iter().map(|c| c.row).collect();
        let lo = *rows.iter().min().unwrap();
        let hi = *rows.iter().max().unwrap();
        if !shape.contains_rect(chosen[0].col, chosen[k - 1].col, lo, hi) {
            continue;
        }
        if rows.windows(2).all(|p| p[0] < p[1]) {
            best.0 = best.0.max(k);
        }
        if rows.windows(2).all(|p| p[0] > p[1]) {
            best.1 = best.1.max(k);
        }
    }
    best
}

/// Product over columns of `height + 1`.
pub fn count_fillings(shape: &StackPolyomino) -> u128 {
    shape.spans().iter().map(|s| s.height() as u128 + 1).product()
}

/// Every filling of `shape` with at most one 1 per column, in a fixed order: the first column
/// varies slowest, and within a column "empty" comes before rows bottom to top.
pub fn enumerate_fillings(shape: &StackPolyomino, cap: u128) -> Result<Fillings> {
    let size = count_fillings(shape);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(Fillings {
        shape: shape.clone(),
        digits: vec![0; shape.ncols()],
        done: false,
    })
}

/// Iterator returned by [`enumerate_fillings`].
pub struct Fillings {
    shape: StackPolyomino,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Fillings {
    type Item = StackFilling;

    fn next(&mut self) -> Option<StackFilling> {
        if self.done {
            return None;
        }
        let rows = self
            .digits
            .iter()
            .enumerate()
            .map(|(j, &d)| (d > 0).then(|| self.shape.column(j + 1).bottom + d))
            .collect();
        let out = StackFilling::from_columns(self.shape.clone(), rows).expect("inside the shape");
        let mut j = self.digits.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            if self.digits[j] < self.shape.column(j + 1).height() {
                self.digits[j] += 1;
                break;
            }
            self.digits[j] = 0;
        }
        Some(out)
    }
}

/// Answer of the bounded K-Knuth search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KKnuthVerdict {
    /// A chain of words from the first to the second, each one relation step from the next.
    Equivalent(Vec<Word>),
    /// Not found within the bounds. Says nothing either way.
    Unknown,
}

/// Words one relation away from `w`, keeping lengths at most `max_len`.
pub fn kknuth_neighbors(w: &Word, max_len: usize) -> Vec<Word> {
    let a = w.letters();
    let n = a.len();
    let mut out = vec![];
    let mut push = |v: Vec<usize>| out.push(Word::new(v).unwrap());
    for p in 0..n.saturating_sub(2) {
        let (x, y, z) = (a[p], a[p + 1], a[p + 2]);
        let between = |m: usize, s: usize, t: usize| s.min(t) < m && m < s.max(t);
        // xzy <-> zxy
        if between(z, x, y) {
            let mut v = a.to_vec();
            v.swap(p, p + 1);
            push(v);
        }
        // yxz <-> yzx
        if between(x, y, z) {
            let mut v = a.to_vec();
            v.swap(p + 1, p + 2);
            push(v);
        }
        // xyx <-> yxy
        if x == z && x != y {
            let mut v = a.to_vec();
            v[p] = y;
            v[p + 1] = x;
            v[p + 2] = y;
            push(v);
        }
    }
    // x <-> xx
    for p in 0..n {
        if p + 1 < n && a[p] == a[p + 1] {
            let mut v = a.to_vec();
            v.remove(p);
            push(v);
        }
        if n < max_len {
            let mut v = a.to_vec();
            v.insert(p, a[p]);
            push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether every consecutive pair of `chain` is one relation step apart.
pub fn witness_is_valid(chain: &[Word]) -> bool {
    chain.windows(2).all(|p| {
        let len = p[0].len().max(p[1].len());
        kknuth_neighbors(&p[0], len).contains(&p[1])
    })
}

/// Bidirectional breadth-first search for a chain of K-Knuth relations from `w1` to `w2`,
/// through words of length at most `max_len`, expanding at most `max_steps` words.
pub fn kknuth_equivalent(w1: &Word, w2: &Word, max_len: usize, max_steps: usize) -> KKnuthVerdict {
    if w1 == w2 {
        return KKnuthVerdict::Equivalent(vec![w1.clone()]);
    }
    let mut parents: [HashMap<Word, Option<Word>>; 2] = [HashMap::new(), HashMap::new()];
    let mut queues: [VecDeque<Word>; 2] = [VecDeque::new(), VecDeque::new()];
    parents[0].insert(w1.clone(), None);
    parents[1].insert(w2.clone(), None);
    queues[0].push_back(w1.clone());
    queues[1].push_back(w2.clone());
    let mut steps = 0;
    while steps < max_steps && !(queues[0].is_empty() && queues[1].is_empty()) {
        let side = if queues[1].is_empty() || (!queues[0].is_empty() && queues[0].len() <= queues[1].len()) {
            0
        } else {
            1
        };
        let Some(cur) = queues[side].pop_front() else { break };
        steps += 1;
        for next in kknuth_neighbors(&cur, max_len) {
            if parents[side].contains_key(&next) {
                continue;
            }
            parents[side].insert(next.clone(), Some(cur.clone()));
            if parents[1 - side].contains_key(&next) {
                return KKnuthVerdict::Equivalent(join(&parents, &next));
            }
            queues[side].push_back(next);
        }
    }
    KKnuthVerdict::Unknown
}

/// [`kknuth_equivalent`] with words up to four letters longer than the longer input.
pub fn kknuth_equivalent_default(w1: &Word, w2: &Word) -> KKnuthVerdict {
    kknuth_equivalent(w1, w2, w1.len().max(w2.len()) + 4, DEFAULT_KKNUTH_STEPS)
}

fn join(parents: &[HashMap<Word, Option<Word>>; 2], meet: &Word) -> Vec<Word> {
    let walk = |m: &HashMap<Word, Option<Word>>| {
        let mut path = vec![meet.clone()];
        while let Some(Some(p)) = m.get(path.last().unwrap()) {
            path.push(p.clone());
        }
        path
    };
    let mut left = walk(&parents[0]);
    left.reverse();
    let right = walk(&parents[1]);
    left.extend(right.into_iter().skip(1));
    left
}
