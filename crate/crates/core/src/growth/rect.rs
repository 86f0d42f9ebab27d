//! Growth diagrams on rectangles and their link to Hecke insertion.

use serde_json::json;

use super::rules::BackwardRule;
use super::{grow_stack, shrink_stack_traced, Boundary, BoundaryLabel, GrowthDiagram};
use crate::error::{Error, Result};
use crate::partition::{Partition, TabCell};
use crate::shape::{StackFilling, StackPolyomino};
use crate::tableau::{IncreasingTableau, SetValuedTableau};
use crate::word::Word;

/// Top and right border of a rectangular diagram with `m` rows and `n` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectBoundary {
    /// `(μ_k, e_k)` for `k = 0..=n`; `e_0` is always `None`.
    pub top: Vec<(Partition, Option<usize>)>,
    /// `υ_y` for `y = 0..=m`, with `υ_m = μ_n`.
    pub right: Vec<Partition>,
}

impl RectBoundary {
    pub fn rows(&self) -> usize {
        self.right.len() - 1
    }

    pub fn cols(&self) -> usize {
        self.top.len() - 1
    }

    /// Same data in boundary-corner order.
    pub fn to_boundary(&self) -> Boundary {
        let mut labels: Vec<BoundaryLabel> = self
            .top
            .iter()
            .map(|(p, e)| BoundaryLabel {
                partitions: vec![p.clone()],
                terminate_row: *e,
            })
            .collect();
        let m = self.rows();
        if self.cols() > 0 {
            labels.extend((0..m).rev().map(|y| BoundaryLabel::single(self.right[y].clone())));
        }
        Boundary(labels)
    }

    pub fn from_boundary(rows: usize, cols: usize, b: &Boundary) -> Result<Self> {
        let expected = if cols == 0 { 1 } else { cols + rows + 1 };
        if b.0.len() != expected || b.0.iter().any(|l| l.partitions.len() != 1) {
            return Err(Error::Constraint(format!(
                "a {rows}x{cols} rectangle needs {expected} single-partition labels"
            )));
        }
        let top = b.0[..=cols]
            .iter()
            .map(|l| (l.last().clone(), l.terminate_row))
            .collect();
        let mut right: Vec<Partition> = b.0[cols..].iter().map(|l| l.last().clone()).collect();
        right.reverse();
        if cols == 0 {
            right = vec![Partition::empty(); rows + 1];
        }
        Ok(RectBoundary { top, right })
    }

    /// Checks the local conditions every grown border satisfies: containments, single-box or
    /// repeated steps along the top, rook strips up the right side, and row labels only on repeats
    /// and on rows ending in a corner.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::NotInImage(m));
        if !self.top[0].0.is_empty() || self.top[0].1.is_some() || !self.right[0].is_empty() {
            return bad("the top-left and bottom-right corners must be empty and unlabeled".into());
        }
        if self.top.last().map(|t| &t.0) != self.right.last() {
            return bad("top and right borders disagree at the top-right corner".into());
        }
        for k in 1..self.top.len() {
            let (prev, _) = &self.top[k - 1];
            let (cur, e) = &self.top[k];
            if !cur.covers_or_equals(prev) {
                return bad(format!("top step {k}: {prev} -> {cur} is not a single box or repeat"));
            }
            if let Some(r) = e {
                if cur != prev || !cur.removable_rows().contains(r) {
                    return bad(format!("top step {k}: label {r} is not allowed on {prev} -> {cur}"));
                }
            }
        }
        for y in 1..self.right.len() {
            if !self.right[y].is_rook_strip_over(&self.right[y - 1]) {
                return bad(format!(
                    "right step {y}: {} -> {} is not a rook strip",
                    self.right[y - 1],
                    self.right[y]
                ));
            }
        }
        Ok(())
    }
}

/// Grows the diagram of a filling of a rectangle.
pub fn grow_rectangle(f: &StackFilling) -> Result<GrowthDiagram> {
    if !f.shape().is_rectangle() {
        return Err(Error::InvalidShape(format!("{} is not a rectangle", f.shape())));
    }
    grow_stack(f)
}

/// Grows the diagram of the word filling: column `i` holds its 1 in row `w_i`.
pub fn grow_word(w: &Word) -> GrowthDiagram {
    grow_stack(&StackFilling::from_word(w)).expect("rectangles always grow")
}

pub fn rect_boundary(d: &GrowthDiagram) -> RectBoundary {
    let shape = d.shape();
    let (m, n) = (shape.nrows(), shape.ncols());
    let top = (0..=n)
        .map(|k| {
            let p = d.corner(k, m).cloned().unwrap_or_default();
            (p, if k == 0 { None } else { d.edge(k, m) })
        })
        .collect();
    let right = (0..=m)
        .map(|y| d.corner(n, y).cloned().unwrap_or_default())
        .collect();
    RectBoundary { top, right }
}

/// The insertion tableau (from the right border) and recording tableau (from the top border).
pub fn extract_pq(b: &RectBoundary) -> Result<(IncreasingTableau, SetValuedTableau)> {
    let p = IncreasingTableau::from_chain(&b.right)?;
    let mut rows: Vec<Vec<Vec<usize>>> = vec![];
    for k in 1..b.top.len() {
        let (prev, _) = &b.top[k - 1];
        let (cur, e) = &b.top[k];
        if cur != prev {
            let cell = cur.skew_boxes(prev)[0];
            if cell.row > rows.len() {
                rows.push(vec![]);
            }
            rows[cell.row - 1].push(vec![k]);
        } else if let Some(r) = e {
            let cell = TabCell::new(*r, cur.part(*r));
            rows[cell.row - 1][cell.col - 1].push(k);
        }
    }
    Ok((p, SetValuedTableau::new(rows)?))
}

/// Inverts [`grow_rectangle`] from the border; also returns the backward rule used at each square,
/// `rules[j - 1][y - 1]` for column `j` and row `y`.
pub fn shrink_rectangle(b: &RectBoundary) -> Result<(StackFilling, Vec<Vec<BackwardRule>>)> {
    b.validate()?;
    let shape = StackPolyomino::rectangle(b.rows(), b.cols());
    let s = shrink_stack_traced(&shape, &b.to_boundary())?;
    Ok((s.filling, s.rules))
}

/// Corner labels as a grid `corners[x][y]` together with sparse edge labels, as JSON.
pub fn rect_json(d: &GrowthDiagram) -> serde_json::Value {
    let shape = d.shape();
    let corners: Vec<Vec<String>> = (0..=shape.ncols())
        .map(|x| {
            (0..=shape.nrows())
                .map(|y| d.corner(x, y).map(|p| p.to_string()).unwrap_or_default())
                .collect()
        })
        .collect();
    let edges: Vec<_> = d
        .edge_labels()
        .into_iter()
        .map(|(col, row, label)| json!({"col": col, "row": row, "label": label}))
        .collect();
    json!({
        "rows": shape.nrows(),
        "cols": shape.ncols(),
        "corners": corners,
        "edges": edges,
        "filling": d.filling().ones(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word;

    #[test]
    fn pq_of_small_word() {
        let d = grow_word(&word!("132123"));
        let b = rect_boundary(&d);
        let (p, q) = extract_pq(&b).unwrap();
        assert_eq!(p.to_string(), "1,2,3/2/3");
        assert_eq!(q.to_string(), "{1}{2,5}{6}/{3}/{4}");
    }

    #[test]
    fn boundary_conversions() {
        let d = grow_word(&word!("2131"));
        let b = rect_boundary(&d);
        assert_eq!(b.to_boundary(), d.boundary());
        assert_eq!(RectBoundary::from_boundary(3, 4, &d.boundary()).unwrap(), b);
        b.validate().unwrap();
    }
}
