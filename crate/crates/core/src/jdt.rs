use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Partition, TabCell};
use crate::tableau::IncreasingTableau;

/// Content of one box during a slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// Inner shape box that does not take part.
    Inner,
    /// The moving hole.
    Dot,
    Val(usize),
}

/// A snapshot of the working grid, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame(pub Vec<Vec<Slot>>);

impl fmt::Display for Frame {
    /// `.` for inner boxes, `*` for holes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row
                .iter()
                .map(|s| match s {
                    Slot::Inner => ".".to_string(),
                    Slot::Dot => "*".to_string(),
                    Slot::Val(v) => v.to_string(),
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Frame {
    fn at(&self, r: usize, c: usize) -> Option<Slot> {
        self.0.get(r).and_then(|row| row.get(c)).copied()
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize, Slot)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &s)| (r, c, s)))
    }

    /// One simultaneous switch of the holes with the value `i`.
    /// `forward` moves holes right and down.
    fn switch(&mut self, i: usize, forward: bool) {
        let (back, ahead): ([(isize, isize); 2], [(isize, isize); 2]) = if forward {
            ([(0, -1), (-1, 0)], [(0, 1), (1, 0)])
        } else {
            ([(0, 1), (1, 0)], [(0, -1), (-1, 0)])
        };
        let near = |f: &Frame, r: usize, c: usize, dirs: &[(isize, isize)], want: Slot| {
            dirs.iter().any(|&(dr, dc)| {
                let (rr, cc) = (r as isize + dr, c as isize + dc);
                rr >= 0 && cc >= 0 && f.at(rr as usize, cc as usize) == Some(want)
            })
        };
        let mut to_dot = vec![];
        let mut to_val = vec![];
        for (r, c, s) in self.cells() {
            match s {
                Slot::Val(v) if v == i && near(self, r, c, &back, Slot::Dot) => to_dot.push((r, c)),
                Slot::Dot if near(self, r, c, &ahead, Slot::Val(i)) => to_val.push((r, c)),
                _ => {}
            }
        }
        for (r, c) in to_dot {
            self.0[r][c] = Slot::Dot;
        }
        for (r, c) in to_val {
            self.0[r][c] = Slot::Val(i);
        }
    }
}

fn grid_of(t: &IncreasingTableau, outer: &Partition) -> Frame {
    let inner = t.inner();
    let rows = (1..=outer.len())
        .map(|r| {
            (1..=outer.part(r))
                .map(|c| {
                    if c <= inner.part(r) {
                        Slot::Inner
                    } else {
                        t.get(TabCell::new(r, c)).map_or(Slot::Dot, Slot::Val)
                    }
                })
                .collect()
        })
        .collect();
    Frame(rows)
}

/// Reads a tableau back off a grid, treating holes as inner boxes if `holes_inner`, otherwise as absent.
fn tableau_of(frame: &Frame, holes_inner: bool) -> Result<IncreasingTableau> {
    let mut inner = vec![];
    let mut rows = vec![];
    for row in &frame.0 {
        let mut skip = 0;
        let mut vals = vec![];
        let mut holes_after = false;
        for s in row {
            match s {
                Slot::Inner => skip += 1,
                Slot::Dot if holes_inner => {
                    if !vals.is_empty() {
                        return Err(Error::Constraint("hole did not reach the inner boundary".into()));
                    }
                    skip += 1;
                }
                Slot::Dot => holes_after = true,
                Slot::Val(v) => {
                    if holes_after {
                        return Err(Error::Constraint("hole did not reach the outer boundary".into()));
                    }
                    vals.push(*v);
                }
            }
        }
        inner.push(skip);
        rows.push(vals);
    }
    IncreasingTableau::new(Partition::new(inner)?, rows)
}

fn check_inner_corners(t: &IncreasingTableau, corners: &[TabCell]) -> Result<()> {
    let inner = t.inner();
    let distinct: BTreeSet<_> = corners.iter().collect();
    if distinct.len() != corners.len() {
        return Err(Error::Constraint("repeated inner corner".into()));
    }
    for &c in corners {
        if c.row == 0 || c.col != inner.part(c.row) || c.col == 0 || inner.part(c.row + 1) >= c.col {
            return Err(Error::Constraint(format!("{c} is not an inner corner of {inner}")));
        }
    }
    Ok(())
}

fn check_outer_corners(t: &IncreasingTableau, corners: &[TabCell]) -> Result<Partition> {
    let mut outer = t.outer();
    let mut sorted = corners.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != corners.len() {
        return Err(Error::Constraint("repeated outer corner".into()));
    }
    let base = outer.clone();
    for &c in &sorted {
        if c.col != base.part(c.row) + 1 || !base.addable_rows().contains(&c.row) {
            return Err(Error::Constraint(format!("{c} is not an outer corner of {base}")));
        }
        outer = outer.add_box(c.row).expect("addable");
    }
    Ok(outer)
}

/// Forward K-jdt: holes at the inner corners `corners` slide out through the entries `1, 2, ...`.
pub fn jdt_forward(t: &IncreasingTableau, corners: &[TabCell]) -> Result<IncreasingTableau> {
    jdt_forward_traced(t, corners).map(|(t, _)| t)
}

/// As [`jdt_forward`], also returning the grid before the first switch and after each one.
pub fn jdt_forward_traced(
    t: &IncreasingTableau,
    corners: &[TabCell],
) -> Result<(IncreasingTableau, Vec<Frame>)> {
    check_inner_corners(t, corners)?;
    let mut frame = grid_of(t, &t.outer());
    for c in corners {
        frame.0[c.row - 1][c.col - 1] = Slot::Dot;
    }
    let mut frames = vec![frame.clone()];
    for i in 1..=t.max_entry() {
        frame.switch(i, true);
        frames.push(frame.clone());
    }
    Ok((tableau_of(&frame, false)?, frames))
}

/// Reverse K-jdt: holes at the outer corners `corners` slide in through the entries `max, ..., 1`
/// and join the inner shape.
pub fn jdt_reverse(t: &IncreasingTableau, corners: &[TabCell]) -> Result<IncreasingTableau> {
    jdt_reverse_traced(t, corners).map(|(t, _)| t)
}

pub fn jdt_reverse_traced(
    t: &IncreasingTableau,
    corners: &[TabCell],
) -> Result<(IncreasingTableau, Vec<Frame>)> {
    let outer = check_outer_corners(t, corners)?;
    let mut frame = grid_of(t, &outer);
    let mut frames = vec![frame.clone()];
    for i in (1..=t.max_entry()).rev() {
        frame.switch(i, false);
        frames.push(frame.clone());
    }
    Ok((tableau_of(&frame, true)?, frames))
}

/// One step of the jdt map on straight tableaux: empty the `1` box (if any), slide it out, and lower every entry by one.
pub fn jdt_map(t: &IncreasingTableau) -> Result<IncreasingTableau> {
    jdt_map_traced(t).map(|(t, _)| t)
}

pub fn jdt_map_traced(t: &IncreasingTableau) -> Result<(IncreasingTableau, Vec<Frame>)> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("jdt map needs a straight tableau".into()));
    }
    if t.get(TabCell::new(1, 1)) != Some(1) {
        return Ok((t.map_entries(|v| v - 1), vec![]));
    }
    let mut rows = t.rows().to_vec();
    rows[0].remove(0);
    let skew = IncreasingTableau::new(Partition::new(vec![1])?, rows)?;
    let (slid, frames) = jdt_forward_traced(&skew, &[TabCell::new(1, 1)])?;
    Ok((slid.map_entries(|v| v - 1), frames))
}

/// Inverse of [`jdt_map`] given the shape `target` of the original tableau.
pub fn jdt_map_inverse(t: &IncreasingTableau, target: &Partition) -> Result<IncreasingTableau> {
    if !t.is_straight() {
        return Err(Error::InvalidTableau("jdt map needs a straight tableau".into()));
    }
    let shape = t.shape();
    if *target == shape {
        return Ok(t.map_entries(|v| v + 1));
    }
    if !target.is_rook_strip_over(&shape) {
        return Err(Error::Constraint(format!(
            "{target} / {shape} is not a set of outer corners"
        )));
    }
    let corners = target.skew_boxes(&shape);
    let back = jdt_reverse(t, &corners)?;
    if *back.inner() != Partition::new(vec![1])? {
        return Err(Error::Constraint(format!(
            "reverse slide into {target} does not end at the top-left box"
        )));
    }
    let mut rows: Vec<Vec<usize>> = back.rows().iter().map(|r| r.iter().map(|v| v + 1).collect()).collect();
    rows[0].insert(0, 1);
    IncreasingTableau::straight(rows)
}

/// Rectifies `t` by sliding out the cells of `u` holding `max(u)`, then `max(u) - 1`, down to `1`.
/// The shape of `u` must be the inner shape of `t`. Values of `u` may skip.
pub fn rectify_with(u: &IncreasingTableau, t: &IncreasingTableau) -> Result<IncreasingTableau> {
    if !u.is_straight() || u.shape() != *t.inner() {
        return Err(Error::Constraint(format!(
            "guide tableau shape {} differs from inner shape {}",
            u.shape(),
            t.inner()
        )));
    }
    let mut cur = t.clone();
    for i in (1..=u.max_entry()).rev() {
        let cells = u.cells_with(i);
        if !cells.is_empty() {
            cur = jdt_forward(&cur, &cells)?;
        }
    }
    Ok(cur)
}
