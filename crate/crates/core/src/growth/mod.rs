//! Growth diagrams on stack polyominoes. Rectangles are the special case without turns.

pub mod rect;
pub mod rules;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::{jdt_map, jdt_map_inverse};
use crate::partition::Partition;
use crate::shape::{ColumnSpan, FillCell, StackFilling, StackPolyomino};
use crate::tableau::IncreasingTableau;
use rules::{BackwardRule, ForwardRule};

/// Everything computed for one column of a diagram. Chains are indexed by height minus `span.bottom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnData {
    pub span: ColumnSpan,
    pub left: Vec<Partition>,
    pub right: Vec<Partition>,
    /// `edges[k]` labels the horizontal edge at height `span.bottom + k`.
    pub edges: Vec<Option<usize>>,
    /// Row of the 1, counted from the bottom of the polyomino.
    pub x: Option<usize>,
    /// `(λ_0, ..., λ_l)` when there is a turn of `l` rows to the left of this column.
    pub turn: Option<Vec<Partition>>,
    pub rules: Vec<ForwardRule>,
}

/// A fully labeled growth diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDiagram {
    filling: StackFilling,
    columns: Vec<ColumnData>,
}

/// Label of one corner on the upper-right boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundaryLabel {
    /// One partition, or `λ_0 ⊆ ... ⊆ λ_l` at the corner above a turn.
    pub partitions: Vec<Partition>,
    /// Row label of the horizontal edge ending here, attached to the last partition.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terminate_row: Option<usize>,
}

impl BoundaryLabel {
    pub fn single(p: Partition) -> Self {
        BoundaryLabel {
            partitions: vec![p],
            terminate_row: None,
        }
    }

    pub fn last(&self) -> &Partition {
        self.partitions.last().expect("nonempty label")
    }

    pub fn first(&self) -> &Partition {
        &self.partitions[0]
    }

    /// Every partition conjugated, with the row label `r` replaced by the length of row `r`.
    pub fn conjugate(&self) -> BoundaryLabel {
        BoundaryLabel {
            partitions: self.partitions.iter().map(Partition::conjugate).collect(),
            terminate_row: self.terminate_row.map(|r| self.last().part(r)),
        }
    }
}

impl fmt::Display for BoundaryLabel {
    /// `321^3` for a labeled single partition, `(21,32,321^3)` for a sequence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.partitions.iter().map(Partition::to_compact).collect();
        if let Some(r) = self.terminate_row {
            let last = parts.last_mut().unwrap();
            last.push_str(&format!("^{r}"));
        }
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(","))
        }
    }
}

/// The labels of all boundary corners, in order from `(0, top_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Boundary(pub Vec<BoundaryLabel>);

impl Boundary {
    pub fn conjugate(&self) -> Boundary {
        Boundary(self.0.iter().map(BoundaryLabel::conjugate).collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Boundary> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("boundary JSON: {e}")))
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(BoundaryLabel::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

fn rule_error(col: usize, row: usize, detail: String) -> Error {
    Error::NoRuleApplies { col, row, detail }
}

/// Runs the forward rules up one column. `x` is the row of the 1 relative to the column bottom.
fn grow_column(col: usize, span: ColumnSpan, left: &[Partition], x: Option<usize>) -> Result<(Vec<Partition>, Vec<Option<usize>>, Vec<ForwardRule>)> {
    let h = span.height();
    let mut right = vec![Partition::empty()];
    let mut edges = vec![None];
    let mut applied = vec![];
    for k in 1..=h {
        let out = rules::forward(&left[k - 1], &right[k - 1], &left[k], edges[k - 1], x == Some(k))
            .map_err(|d| rule_error(col, span.bottom + k, d))?;
        right.push(out.gamma);
        edges.push(out.top);
        applied.push(out.rule);
    }
    Ok((right, edges, applied))
}

/// Runs the backward rules down one column from its right border, top-left label and top edge label.
fn shrink_column(
    col: usize,
    span: ColumnSpan,
    right: &[Partition],
    top_left: &Partition,
    top_edge: Option<usize>,
) -> Result<(Vec<Partition>, Vec<Option<usize>>, Option<usize>, Vec<BackwardRule>)> {
    let h = span.height();
    let mut left = vec![Partition::empty(); h + 1];
    let mut edges = vec![None; h + 1];
    let mut x = None;
    let mut applied = vec![BackwardRule::B1; h];
    left[h] = top_left.clone();
    edges[h] = top_edge;
    for k in (1..=h).rev() {
        let out = rules::backward(&left[k], &right[k], &right[k - 1], edges[k])
            .map_err(|d| rule_error(col, span.bottom + k, d))?;
        if out.x {
            if x.is_some() {
                return Err(Error::NotInImage(format!("column {col} would get two 1s")));
            }
            x = Some(k);
        }
        left[k - 1] = out.lambda;
        edges[k - 1] = out.bottom;
        applied[k - 1] = out.rule;
    }
    if !left[0].is_empty() || edges[0].is_some() {
        return Err(Error::NotInImage(format!(
            "column {col} does not reach the empty partition at its bottom"
        )));
    }
    Ok((left, edges, x, applied))
}

/// The tableau of `chain` after `l` applications of the jdt map, and the shapes met on the way,
/// smallest first.
fn turn_chain(chain: &[Partition], l: usize, h: usize) -> Result<(Vec<Partition>, Vec<Partition>)> {
    let mut t = IncreasingTableau::from_chain(chain)?;
    let mut shapes = vec![t.shape()];
    for _ in 0..l {
        t = jdt_map(&t)?;
        shapes.push(t.shape());
    }
    shapes.reverse();
    Ok((t.chain(h), shapes))
}

/// Grows the diagram of a filling, column by column from the left.
pub fn grow_stack(f: &StackFilling) -> Result<GrowthDiagram> {
    let shape = f.shape();
    let mut columns: Vec<ColumnData> = vec![];
    for j in 1..=shape.ncols() {
        let span = shape.column(j);
        let h = span.height();
        let (left, turn) = match columns.last() {
            None => (vec![Partition::empty(); h + 1], None),
            Some(prev) => {
                let l = span.bottom - prev.span.bottom;
                let upto = span.top - prev.span.bottom;
                if l == 0 {
                    (prev.right[..=h].to_vec(), None)
                } else {
                    let (left, shapes) = turn_chain(&prev.right[..=upto], l, h)?;
                    (left, Some(shapes))
                }
            }
        };
        let x_rel = f.one_in_column(j).map(|r| r - span.bottom);
        let (right, edges, rules) = grow_column(j, span, &left, x_rel)?;
        columns.push(ColumnData {
            span,
            left,
            right,
            edges,
            x: f.one_in_column(j),
            turn,
            rules,
        });
    }
    Ok(GrowthDiagram {
        filling: f.clone(),
        columns,
    })
}

impl GrowthDiagram {
    pub fn filling(&self) -> &StackFilling {
        &self.filling
    }

    pub fn shape(&self) -> &StackPolyomino {
        self.filling.shape()
    }

    pub fn columns(&self) -> &[ColumnData] {
        &self.columns
    }

    /// Column `j` (1-based).
    pub fn column(&self, j: usize) -> &ColumnData {
        &self.columns[j - 1]
    }

    /// The label at `(x, y)` seen from the left of column `x + 1`'s turn, i.e. column `x`'s right border.
    /// `x = 0` gives the left border of column 1.
    pub fn corner(&self, x: usize, y: usize) -> Option<&Partition> {
        if x == 0 {
            let c = self.columns.first()?;
            return (y >= c.span.bottom && y <= c.span.top).then(|| &c.left[y - c.span.bottom]);
        }
        let c = self.columns.get(x - 1)?;
        (y >= c.span.bottom && y <= c.span.top).then(|| &c.right[y - c.span.bottom])
    }

    /// Label of the horizontal edge in column `col` at height `y`.
    pub fn edge(&self, col: usize, y: usize) -> Option<usize> {
        let c = self.columns.get(col.checked_sub(1)?)?;
        if y < c.span.bottom || y > c.span.top {
            return None;
        }
        c.edges[y - c.span.bottom]
    }

    /// All nonempty edge labels as `(col, height, label)`.
    pub fn edge_labels(&self) -> Vec<(usize, usize, usize)> {
        let mut out = vec![];
        for (j, c) in self.columns.iter().enumerate() {
            for (k, e) in c.edges.iter().enumerate() {
                if let Some(r) = e {
                    out.push((j + 1, c.span.bottom + k, *r));
                }
            }
        }
        out
    }

    pub fn boundary(&self) -> Boundary {
        let shape = self.shape();
        let n = shape.ncols();
        let labels = shape
            .boundary_corners()
            .into_iter()
            .map(|(x, y)| {
                if x == 0 {
                    return BoundaryLabel::single(Partition::empty());
                }
                let c = &self.columns[x - 1];
                let p = c.right[y - c.span.bottom].clone();
                let partitions = match self.columns.get(x).and_then(|next| next.turn.as_ref()) {
                    Some(seq) if x < n && y == shape.column(x + 1).top => seq.clone(),
                    _ => vec![p],
                };
                let terminate_row = if y == c.span.top { c.edges[c.span.height()] } else { None };
                BoundaryLabel { partitions, terminate_row }
            })
            .collect();
        Boundary(labels)
    }

    /// Text picture: corner labels with edge labels between them, and `X` in the squares holding a 1.
    pub fn render(&self) -> String {
        let shape = self.shape();
        let n = shape.ncols();
        let label = |x: usize, y: usize| self.corner(x, y).map(Partition::to_compact);
        let width = (0..=n)
            .flat_map(|x| (0..=shape.nrows()).filter_map(move |y| label(x, y)))
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        let pad = |s: &str| format!("{s:<width$}");
        let mut lines = vec![];
        for y in (0..=shape.nrows()).rev() {
            let mut line = String::new();
            for x in 0..=n {
                line.push_str(&pad(&label(x, y).unwrap_or_default()));
                if x < n {
                    let seg = match self.edge(x + 1, y) {
                        Some(r) => format!("-{r}-"),
                        None if self.corner(x + 1, y).is_some() && self.corner(x, y).is_some() => " - ".into(),
                        None => "   ".into(),
                    };
                    line.push_str(&seg);
                }
            }
            lines.push(line.trim_end().to_string());
            if y > 0 {
                let mut cells = String::new();
                for x in 0..=n {
                    cells.push_str(&pad(""));
                    if x < n {
                        let mark = if self.filling.is_one(FillCell::new(x + 1, y)) {
                            " X "
                        } else {
                            "   "
                        };
                        cells.push_str(mark);
                    }
                }
                lines.push(cells.trim_end().to_string());
            }
        }
        lines.join("\n") + "\n"
    }

    /// JSON dump: per-column chains, edge labels as `{col,row,label}`, filling cells and the boundary.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let columns: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .map(|(j, c)| {
                json!({
                    "col": j + 1,
                    "bottom": c.span.bottom,
                    "top": c.span.top,
                    "left": c.left,
                    "right": c.right,
                    "turn": c.turn,
                    "rules": c.rules,
                })
            })
            .collect();
        let edges: Vec<_> = self
            .edge_labels()
            .into_iter()
            .map(|(col, row, label)| json!({"col": col, "row": row, "label": label}))
            .collect();
        json!({
            "widths": self.shape().widths(),
            "filling": self.filling.ones(),
            "columns": columns,
            "edges": edges,
            "boundary": self.boundary(),
        })
    }
}

/// Result of running the backward rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shrunk {
    pub filling: StackFilling,
    /// `rules[j - 1][k - 1]` was applied at the square of column `j`, `k` rows above the column bottom.
    pub rules: Vec<Vec<BackwardRule>>,
}

/// Recovers the filling from a boundary labeling, or reports that no filling grows into it.
pub fn shrink_stack(shape: &StackPolyomino, boundary: &Boundary) -> Result<StackFilling> {
    shrink_stack_traced(shape, boundary).map(|s| s.filling)
}

/// Checks a labeling against the shape: one label per boundary corner, sequences exactly above
/// turns, empty ends, single-box or repeated horizontal steps with row labels only on repeats,
/// rook strips on vertical steps, and sequences growing by outer corners.
pub fn validate_boundary(shape: &StackPolyomino, boundary: &Boundary) -> Result<()> {
    let corners = shape.boundary_corners();
    if corners.len() != boundary.0.len() {
        return Err(Error::Constraint(format!(
            "shape has {} boundary corners but {} labels were given",
            corners.len(),
            boundary.0.len()
        )));
    }
    let n = shape.ncols();
    for (&(x, y), lab) in corners.iter().zip(&boundary.0) {
        let turn_len = if x >= 1 && x < n && y == shape.column(x + 1).top {
            shape.column(x + 1).bottom - shape.column(x).bottom
        } else {
            0
        };
        if lab.partitions.len() != turn_len + 1 {
            return Err(Error::Constraint(format!(
                "corner ({x},{y}) needs {} partition(s), got {}",
                turn_len + 1,
                lab.partitions.len()
            )));
        }
        if lab.terminate_row.is_some() && (x == 0 || y != shape.column(x).top) {
            return Err(Error::Constraint(format!(
                "corner ({x},{y}) does not end a horizontal edge and cannot carry a row label"
            )));
        }
    }
    let bad = |m: String| Err(Error::NotInImage(m));
    let ends = [boundary.0.first(), boundary.0.last()];
    if ends.iter().any(|l| l.is_some_and(|l| !l.last().is_empty() || l.terminate_row.is_some())) {
        return bad("the first and last corners must be labeled by the empty partition".into());
    }
    for (&(x, y), lab) in corners.iter().zip(&boundary.0) {
        for w in lab.partitions.windows(2) {
            if !w[1].is_rook_strip_over(&w[0]) {
                return bad(format!("corner ({x},{y}): {} / {} is not a set of outer corners", w[1], w[0]));
            }
        }
    }
    for (i, pair) in boundary.0.windows(2).enumerate() {
        let ((x0, y0), (x1, _)) = (corners[i], corners[i + 1]);
        let (a, b) = (&pair[0], &pair[1]);
        if x1 == x0 + 1 {
            if !b.last().covers_or_equals(a.first()) {
                return bad(format!(
                    "edge ({x0},{y0})-({x1},{y0}): {} and {} differ by more than one box",
                    a.first(),
                    b.last()
                ));
            }
            if let Some(r) = b.terminate_row {
                if b.last() != a.first() || !b.last().removable_rows().contains(&r) {
                    return bad(format!("edge ({x0},{y0})-({x1},{y0}): row label {r} is not allowed"));
                }
            }
        } else if !a.last().is_rook_strip_over(b.last()) {
            return bad(format!(
                "edge ({x0},{y0})-({x0},{}): {} / {} is not a rook strip",
                y0 - 1,
                a.last(),
                b.last()
            ));
        }
    }
    Ok(())
}

pub fn shrink_stack_traced(shape: &StackPolyomino, boundary: &Boundary) -> Result<Shrunk> {
    validate_boundary(shape, boundary)?;
    let n = shape.ncols();
    let at: HashMap<(usize, usize), &BoundaryLabel> =
        shape.boundary_corners().into_iter().zip(&boundary.0).collect();
    if n == 0 {
        return Ok(Shrunk {
            filling: StackFilling::empty(shape.clone()),
            rules: vec![],
        });
    }

    let last = shape.column(n);
    let mut right: Vec<Partition> = (last.bottom..=last.top).map(|y| at[&(n, y)].last().clone()).collect();
    let mut xs = vec![None; n];
    let mut all_rules = vec![vec![]; n];
    for j in (1..=n).rev() {
        let span = shape.column(j);
        let top_left = if j == 1 {
            Partition::empty()
        } else {
            at[&(j - 1, span.top)].first().clone()
        };
        let top_edge = at[&(j, span.top)].terminate_row;
        let (left, _, x, applied) = shrink_column(j, span, &right, &top_left, top_edge)?;
        xs[j - 1] = x.map(|k| k + span.bottom);
        all_rules[j - 1] = applied;
        if j == 1 {
            break;
        }
        let prev = shape.column(j - 1);
        let l = span.bottom - prev.bottom;
        let mut chain = if l == 0 {
            left
        } else {
            let seq = &at[&(j - 1, span.top)].partitions;
            let mut t = IncreasingTableau::from_chain(&left)
                .map_err(|e| Error::NotInImage(format!("left border of column {j}: {e}")))?;
            for target in &seq[1..] {
                t = jdt_map_inverse(&t, target)
                    .map_err(|e| Error::NotInImage(format!("turn left of column {j}: {e}")))?;
            }
            t.chain(span.top - prev.bottom)
        };
        for y in span.top + 1..=prev.top {
            chain.push(at[&(j - 1, y)].last().clone());
        }
        right = chain;
    }
    let filling = StackFilling::from_columns(shape.clone(), xs)?;
    let regrown = grow_stack(&filling)?.boundary();
    if regrown != *boundary {
        return Err(Error::NotInImage(
            "the recovered filling grows into a different labeling".into(),
        ));
    }
    Ok(Shrunk {
        filling,
        rules: all_rules,
    })
}
