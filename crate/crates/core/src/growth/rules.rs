//! Local rules for one unit square.
//!
//! Corners are named `λ` (bottom-left), `υ` (bottom-right), `μ` (top-left) and `γ` (top-right).
//! The bottom edge runs from `λ` to `υ`, the top edge from `μ` to `γ`; each may carry a row label.

use std::fmt;

use serde::Serialize;

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ForwardRule {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BackwardRule {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
    B10,
    B11,
    B12,
    B13,
    B14,
    B15,
    B16,
}

impl fmt::Display for ForwardRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for BackwardRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Output of a forward step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forward {
    pub gamma: Partition,
    pub top: Option<usize>,
    pub rule: ForwardRule,
}

/// Output of a backward step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Backward {
    pub lambda: Partition,
    pub bottom: Option<usize>,
    pub x: bool,
    pub rule: BackwardRule,
}

/// Row of the single box of `big / small`, if that is what it is.
fn one_box_row(big: &Partition, small: &Partition) -> Option<usize> {
    if !big.contains(small) || big.size() != small.size() + 1 {
        return None;
    }
    (1..=big.len()).find(|&r| big.part(r) != small.part(r))
}

/// Whether `(row, col)` lies in `big / small`.
fn in_skew(big: &Partition, small: &Partition, row: usize, col: usize) -> bool {
    col > small.part(row) && col <= big.part(row)
}

fn add_box(p: &Partition, row: usize) -> Result<Partition, String> {
    p.add_box(row)
        .ok_or_else(|| format!("cannot add a box in row {row} of {p}"))
}

fn remove_box(p: &Partition, row: usize) -> Result<Partition, String> {
    p.remove_box(row)
        .ok_or_else(|| format!("cannot remove a box from row {row} of {p}"))
}

/// Computes `γ` and the top label from the other three corners, the bottom label and the square's content.
pub fn forward(
    lambda: &Partition,
    upsilon: &Partition,
    mu: &Partition,
    bottom: Option<usize>,
    x: bool,
) -> Result<Forward, String> {
    use ForwardRule::*;
    if !upsilon.covers_or_equals(lambda) {
        return Err(format!("bottom edge {lambda} -> {upsilon} is not a single-box step"));
    }
    if !mu.is_rook_strip_over(lambda) {
        return Err(format!("left edge {lambda} -> {mu} is not a rook strip"));
    }
    if let Some(i) = bottom {
        if upsilon != lambda || !upsilon.removable_rows().contains(&i) {
            return Err(format!("bad bottom label {i} on {lambda} -> {upsilon}"));
        }
    }
    // Every square of a grown diagram has a single-box top step and a rook strip on the right.
    let done = |gamma: Partition, top: Option<usize>, rule| {
        if !gamma.covers_or_equals(mu) || !gamma.is_rook_strip_over(upsilon) {
            return Err(format!("{rule} gives {gamma}, which cannot sit over {mu} and beside {upsilon}"));
        }
        Ok(Forward { gamma, top, rule })
    };

    if x {
        if bottom.is_some() || lambda != upsilon {
            return Err("a square with a 1 must have equal bottom corners and no bottom label".into());
        }
        return if mu.part(1) == upsilon.part(1) {
            done(add_box(mu, 1)?, None, F1)
        } else {
            done(mu.clone(), Some(1), F2)
        };
    }
    if mu == lambda {
        return done(upsilon.clone(), bottom, F3);
    }
    if upsilon == lambda && bottom.is_none() {
        return done(mu.clone(), None, F3);
    }
    if !mu.contains(upsilon) {
        return done(upsilon.union(mu), None, F4);
    }
    match bottom {
        None => {
            let i = one_box_row(upsilon, lambda).expect("checked above");
            if mu.part(i + 1) > upsilon.part(i + 1) {
                done(mu.clone(), Some(i + 1), F6)
            } else {
                done(add_box(mu, i + 1)?, None, F5)
            }
        }
        Some(i) => {
            let end = upsilon.part(i);
            let below = in_skew(mu, upsilon, i + 1, end);
            let right = in_skew(mu, upsilon, i, end + 1);
            let row_below = mu.part(i + 1) > upsilon.part(i + 1);
            if below {
                done(mu.clone(), Some(i + 1), F8)
            } else if right && row_below {
                done(mu.clone(), Some(i + 1), F10)
            } else if right {
                done(add_box(mu, i + 1)?, None, F9)
            } else {
                done(mu.clone(), Some(i), F7)
            }
        }
    }
}

/// Computes `λ`, the bottom label and the square's content from `μ`, `γ`, `υ` and the top label.
pub fn backward(
    mu: &Partition,
    gamma: &Partition,
    upsilon: &Partition,
    top: Option<usize>,
) -> Result<Backward, String> {
    use BackwardRule::*;
    if !gamma.covers_or_equals(mu) {
        return Err(format!("top edge {mu} -> {gamma} is not a single-box step"));
    }
    if !gamma.is_rook_strip_over(upsilon) {
        return Err(format!("right edge {upsilon} -> {gamma} is not a rook strip"));
    }
    let done = |lambda: Partition, bottom: Option<usize>, x: bool, rule| {
        Ok(Backward { lambda, bottom, x, rule })
    };
    let g = |r: usize| gamma.part(r);
    let u = |r: usize| upsilon.part(r);

    match top {
        None => {
            if mu == gamma {
                return done(upsilon.clone(), None, false, B1);
            }
            if upsilon == gamma {
                return done(mu.clone(), None, false, B2);
            }
            let i = one_box_row(gamma, mu).expect("checked above");
            if i == 1 {
                return if g(1) > u(1) {
                    done(upsilon.clone(), None, true, B3)
                } else {
                    done(remove_box(upsilon, 1)?, None, false, B4)
                };
            }
            if u(i) == g(i) {
                done(remove_box(upsilon, i)?, None, false, B5)
            } else if u(i) + 1 == g(i) && u(i - 1) == g(i - 1) {
                done(remove_box(upsilon, i - 1)?, None, false, B6)
            } else if u(i) + 1 == g(i) && u(i - 1) + 1 == g(i - 1) {
                done(upsilon.clone(), Some(i - 1), false, B7)
            } else {
                Err(format!("no rule for mu={mu} gamma={gamma} upsilon={upsilon}"))
            }
        }
        Some(r) => {
            if mu != gamma {
                return Err(format!("labeled top edge {mu} -> {gamma} must be a repeat"));
            }
            if r == 0 || r > gamma.len() {
                return Err(format!("top label {r} is not a row of {gamma}"));
            }
            if r == 1 {
                return if upsilon == gamma {
                    done(mu.clone(), Some(1), false, B8)
                } else if u(1) != g(1) {
                    done(upsilon.clone(), None, true, B9)
                } else {
                    done(upsilon.clone(), Some(1), false, B10)
                };
            }
            if upsilon == gamma {
                return done(mu.clone(), Some(r), false, B11);
            }
            let fail = || Err(format!("no rule for label {r}, gamma={gamma} upsilon={upsilon}"));
            if g(r) == g(r - 1) {
                if g(r) == u(r) {
                    done(upsilon.clone(), Some(r), false, B12)
                } else if g(r) == u(r) + 1 {
                    done(upsilon.clone(), Some(r - 1), false, B13)
                } else {
                    fail()
                }
            } else if g(r) == u(r) {
                done(upsilon.clone(), Some(r), false, B14)
            } else if g(r) == u(r) + 1 && g(r - 1) == u(r - 1) {
                done(remove_box(upsilon, r - 1)?, None, false, B15)
            } else if g(r) == u(r) + 1 && g(r - 1) == u(r - 1) + 1 {
                done(upsilon.clone(), Some(r - 1), false, B16)
            } else {
                fail()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn forward_examples() {
        let f = forward(&part![], &part![], &part![], None, true).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![1], None, ForwardRule::F1));
        let f = forward(&part![1], &part![1], &part![2], None, true).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![2], Some(1), ForwardRule::F2));
        // bottom label carried up when the left edge is a repeat
        let f = forward(&part![2, 1], &part![2, 1], &part![2, 1], Some(2), false).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![2, 1], Some(2), ForwardRule::F3));
        let f = forward(&part![1], &part![2], &part![1, 1], None, false).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![2, 1], None, ForwardRule::F4));
        let f = forward(&part![1], &part![2], &part![2], None, false).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![2, 1], None, ForwardRule::F5));
        let f = forward(&part![1], &part![2], &part![2, 1], None, false).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![2, 1], Some(2), ForwardRule::F6));
    }

    #[test]
    fn forward_labeled_bottom() {
        // terminate box (1,1) of 1; nothing of mu / upsilon beside it
        let f = forward(&part![1], &part![1], &part![1], Some(1), false).unwrap();
        assert_eq!(f.rule, ForwardRule::F3);
        let f = forward(&part![2, 1], &part![2, 1], &part![2, 1, 1], Some(1), false).unwrap();
        assert_eq!((f.top, f.rule), (Some(1), ForwardRule::F7));
        let f = forward(&part![2, 1], &part![2, 1], &part![2, 2], Some(1), false).unwrap();
        assert_eq!((f.top, f.rule), (Some(2), ForwardRule::F8));
        let f = forward(&part![1], &part![1], &part![2], Some(1), false).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![2, 1], None, ForwardRule::F9));
        let f = forward(&part![2, 1], &part![2, 1], &part![3, 1, 1], Some(1), false).unwrap();
        assert_eq!((f.gamma.clone(), f.rule), (part![3, 2, 1], ForwardRule::F9));
        // row 1 of 11 ends above another box, so no insertion can stop there
        assert!(forward(&part![1, 1], &part![1, 1], &part![2, 1, 1], Some(1), false).is_err());
        let f = forward(&part![2], &part![2], &part![3, 1], Some(1), false).unwrap();
        assert_eq!((f.gamma, f.top, f.rule), (part![3, 1], Some(2), ForwardRule::F10));
    }

    #[test]
    fn bad_inputs() {
        assert!(forward(&part![], &part![2], &part![], None, false).is_err());
        assert!(forward(&part![], &part![], &part![2], None, false).is_err());
        assert!(forward(&part![1], &part![2], &part![2], Some(1), false).is_err());
        assert!(forward(&part![], &part![1], &part![], None, true).is_err());
        assert!(backward(&part![1], &part![1], &part![1], Some(2)).is_err());
        assert!(backward(&part![], &part![2], &part![2], None).is_err());
    }
}
