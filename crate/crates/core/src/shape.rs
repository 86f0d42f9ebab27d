use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

/// A cell of a filling: `col` counted from the left and `row` from the bottom, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FillCell {
    pub col: usize,
    pub row: usize,
}

impl FillCell {
    pub fn new(col: usize, row: usize) -> Self {
        FillCell { col, row }
    }
}

/// Vertical extent of one column: its cells are rows `bottom + 1 ..= top`, its corners heights `bottom ..= top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColumnSpan {
    pub bottom: usize,
    pub top: usize,
}

impl ColumnSpan {
    pub fn height(&self) -> usize {
        self.top - self.bottom
    }
}

/// Left-justified rows with unimodal widths, listed from the bottom row up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StackPolyomino {
    widths: Vec<usize>,
    spans: Vec<ColumnSpan>,
}

impl StackPolyomino {
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        if widths.contains(&0) {
            return Err(Error::InvalidShape("row widths must be positive".into()));
        }
        let peak = widths
            .iter()
            .enumerate()
            .max_by_key(|&(i, w)| (w, std::cmp::Reverse(i)))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let up = widths[..peak].windows(2).all(|w| w[0] <= w[1]);
        let down = widths[peak..].windows(2).all(|w| w[0] >= w[1]);
        if !(up && down) {
            return Err(Error::InvalidShape(format!(
                "row widths {widths:?} are not unimodal"
            )));
        }
        let ncols = widths.iter().copied().max().unwrap_or(0);
        let spans = (1..=ncols)
            .map(|j| {
                let bottom = widths.iter().position(|&w| w >= j).unwrap();
                let top = widths.iter().rposition(|&w| w >= j).unwrap() + 1;
                ColumnSpan { bottom, top }
            })
            .collect();
        Ok(StackPolyomino { widths, spans })
    }

    /// `rows` rows of width `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return StackPolyomino::new(vec![]).unwrap();
        }
        StackPolyomino::new(vec![cols; rows]).unwrap()
    }

    /// The staircase with row widths `n-1, ..., 1` from the bottom.
    pub fn staircase(n: usize) -> Self {
        StackPolyomino::new((1..n).rev().collect()).unwrap()
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn nrows(&self) -> usize {
        self.widths.len()
    }

    pub fn ncols(&self) -> usize {
        self.spans.len()
    }

    pub fn num_cells(&self) -> usize {
        self.widths.iter().sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.spans.iter().all(|s| s.bottom == 0 && s.top == self.nrows())
    }

    /// Span of column `j` (1-based).
    pub fn column(&self, j: usize) -> ColumnSpan {
        self.spans[j - 1]
    }

    pub fn spans(&self) -> &[ColumnSpan] {
        &self.spans
    }

    pub fn contains(&self, c: FillCell) -> bool {
        c.col >= 1
            && c.col <= self.ncols()
            && c.row > self.column(c.col).bottom
            && c.row <= self.column(c.col).top
    }

    /// Whether every cell of columns `c1..=c2` and rows `r1..=r2` lies in the shape.
    pub fn contains_rect(&self, c1: usize, c2: usize, r1: usize, r2: usize) -> bool {
        (c1..=c2).all(|c| self.contains(FillCell::new(c, r1)) && self.contains(FillCell::new(c, r2)))
    }

    /// Columns `j` with a turn between `j` and `j + 1`, and the number of rows below it.
    pub fn turns(&self) -> Vec<(usize, usize)> {
        (1..self.ncols())
            .filter_map(|j| {
                let l = self.column(j + 1).bottom - self.column(j).bottom;
                (l > 0).then_some((j, l))
            })
            .collect()
    }

    /// Lattice points `(x, y)` on the upper-right boundary, from `(0, top_1)` to `(ncols, bottom_ncols)`.
    pub fn boundary_corners(&self) -> Vec<(usize, usize)> {
        let n = self.ncols();
        if n == 0 {
            return vec![(0, 0)];
        }
        let mut out = vec![(0, self.column(1).top)];
        for j in 1..=n {
            let top = self.column(j).top;
            out.push((j, top));
            let lower = if j < n {
                self.column(j + 1).top
            } else {
                self.column(j).bottom
            };
            for y in (lower..top).rev() {
                out.push((j, y));
            }
        }
        out
    }

    /// The largest rectangle with upper-right corner `(x, y)`: columns `1..=x`, rows `bottom_x + 1 ..= y`.
    pub fn largest_rectangle(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        if x == 0 {
            return None;
        }
        let b = self.column(x).bottom;
        (y > b).then_some((b + 1, y))
    }
}

impl fmt::Display for StackPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.widths.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for StackPolyomino {
    type Err = Error;

    /// Comma separated row widths, bottom row first.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return StackPolyomino::new(vec![]);
        }
        let widths = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row width {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        StackPolyomino::new(widths)
    }
}

/// A 01-filling of a stack polyomino with at most one 1 per column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StackFilling {
    shape: StackPolyomino,
    cols: Vec<Option<usize>>,
}

impl StackFilling {
    pub fn empty(shape: StackPolyomino) -> Self {
        let n = shape.ncols();
        StackFilling {
            shape,
            cols: vec![None; n],
        }
    }

    /// `rows[j - 1]` is the row of the 1 in column `j`, if any.
    pub fn from_columns(shape: StackPolyomino, rows: Vec<Option<usize>>) -> Result<Self> {
        if rows.len() != shape.ncols() {
            return Err(Error::InvalidFilling(format!(
                "expected {} columns, got {}",
                shape.ncols(),
                rows.len()
            )));
        }
        for (j, r) in rows.iter().enumerate() {
            if let Some(r) = *r {
                if !shape.contains(FillCell::new(j + 1, r)) {
                    return Err(Error::InvalidFilling(format!(
                        "cell (col {}, row {r}) is outside the shape",
                        j + 1
                    )));
                }
            }
        }
        Ok(StackFilling { shape, cols: rows })
    }

    pub fn from_cells(shape: StackPolyomino, cells: &[FillCell]) -> Result<Self> {
        let mut rows = vec![None; shape.ncols()];
        for c in cells {
            if c.col == 0 || c.col > shape.ncols() {
                return Err(Error::InvalidFilling(format!("column {} is outside the shape", c.col)));
            }
            if rows[c.col - 1].is_some() {
                return Err(Error::InvalidFilling(format!("column {} has two 1s", c.col)));
            }
            rows[c.col - 1] = Some(c.row);
        }
        Self::from_columns(shape, rows)
    }

    /// The filling of the `max(w) × |w|` rectangle whose column `i` has its 1 in row `w_i`.
    pub fn from_word(w: &Word) -> Self {
        Self::from_word_in(w, w.max_letter()).unwrap()
    }

    /// Same as [`StackFilling::from_word`] with `rows` rows.
    pub fn from_word_in(w: &Word, rows: usize) -> Result<Self> {
        if w.max_letter() > rows {
            return Err(Error::InvalidWord(format!("letter exceeds row count {rows}")));
        }
        let shape = StackPolyomino::rectangle(rows, w.len());
        Self::from_columns(shape, w.letters().iter().map(|&a| Some(a)).collect())
    }

    pub fn shape(&self) -> &StackPolyomino {
        &self.shape
    }

    pub fn column_rows(&self) -> &[Option<usize>] {
        &self.cols
    }

    /// Row of the 1 in column `j` (1-based).
    pub fn one_in_column(&self, j: usize) -> Option<usize> {
        self.cols[j - 1]
    }

    pub fn ones(&self) -> Vec<FillCell> {
        self.cols
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.map(|r| FillCell::new(j + 1, r)))
            .collect()
    }

    pub fn is_one(&self, c: FillCell) -> bool {
        c.col >= 1 && c.col <= self.cols.len() && self.cols[c.col - 1] == Some(c.row)
    }

    /// Reading the region columns `1..=x`, rows `r1..=r2` left to right, the row of each 1 relative to `r1 - 1`.
    pub fn rectangle_word(&self, x: usize, r1: usize, r2: usize) -> Word {
        let letters = self.cols[..x]
            .iter()
            .filter_map(|r| r.filter(|&r| r >= r1 && r <= r2).map(|r| r - r1 + 1))
            .collect();
        Word::new(letters).unwrap()
    }

    /// Whole-shape word for rectangles.
    pub fn to_word(&self) -> Word {
        self.rectangle_word(self.shape.ncols(), 1, self.shape.nrows())
    }
}

impl fmt::Display for StackFilling {
    /// One line per row, top row first, `X` for a 1 and `.` for a 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (1..=self.shape.nrows()).rev() {
            let w = self.shape.widths()[r - 1];
            let line: String = (1..=w)
                .map(|c| if self.cols[c - 1] == Some(r) { 'X' } else { '.' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl FromStr for StackFilling {
    type Err = Error;

    /// Inverse of `Display`. The shape is read off the line lengths; blank lines are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let widths: Vec<usize> = lines.iter().rev().map(|l| l.chars().count()).collect();
        let shape = StackPolyomino::new(widths)?;
        let mut cells = vec![];
        let nrows = lines.len();
        for (i, line) in lines.iter().enumerate() {
            let row = nrows - i;
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    'X' | 'x' | '1' => cells.push(FillCell::new(c + 1, row)),
                    '.' | '0' => {}
                    other => {
                        return Err(Error::Parse(format!("unexpected character {other:?} in filling")))
                    }
                }
            }
        }
        StackFilling::from_cells(shape, &cells)
    }
}
