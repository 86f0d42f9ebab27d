use hecke_core::growth::rect::{extract_pq, grow_word, rect_boundary, shrink_rectangle};
use hecke_core::growth::rules::BackwardRule::{self, *};
use hecke_core::growth::rules::ForwardRule::{self, *};
use hecke_core::{grow_stack, shrink_stack, word, FillCell, StackFilling, StackPolyomino};

fn filling(widths: &[usize], ones: &[(usize, usize)]) -> StackFilling {
    let shape = StackPolyomino::new(widths.to_vec()).unwrap();
    let cells: Vec<FillCell> = ones.iter().map(|&(c, r)| FillCell::new(c, r)).collect();
    StackFilling::from_cells(shape, &cells).unwrap()
}

#[test]
fn diagram_of_132123() {
    let d = grow_word(&word!("132123"));
    let rows = [
        "∅,1,1,1,1,1,1",
        "∅,1,1,2,21,21,21",
        "∅,1,2,21,211,211,311",
    ];
    for (y, expected) in (1..=3).zip(rows) {
        let got: Vec<String> = (0..=6).map(|x| d.corner(x, y).unwrap().to_compact()).collect();
        assert_eq!(got.join(","), expected, "height {y}");
    }
    assert_eq!(d.edge_labels(), vec![(4, 1, 1), (5, 2, 1), (5, 3, 1)]);
}

#[test]
fn rules_used_for_132123() {
    let d = grow_word(&word!("132123"));
    let forward: [[ForwardRule; 3]; 6] = [
        [F1, F3, F3],
        [F3, F3, F1],
        [F3, F1, F5],
        [F2, F9, F5],
        [F3, F2, F7],
        [F3, F3, F1],
    ];
    for j in 1..=6 {
        assert_eq!(d.column(j).rules, forward[j - 1], "column {j}");
    }
    let backward: [[BackwardRule; 3]; 6] = [
        [B3, B2, B2],
        [B1, B1, B3],
        [B1, B3, B6],
        [B9, B7, B6],
        [B1, B9, B10],
        [B1, B1, B3],
    ];
    let (f, rules) = shrink_rectangle(&rect_boundary(&d)).unwrap();
    assert_eq!(f.to_word(), word!("132123"));
    for j in 1..=6 {
        assert_eq!(rules[j - 1], backward[j - 1], "column {j}");
    }
}

#[test]
fn pq_of_long_word() {
    let (p, q) = extract_pq(&rect_boundary(&grow_word(&word!("5433124235")))).unwrap();
    assert_eq!(p.to_string(), "1,2,3,5/3,4/4/5");
    assert_eq!(q.to_string(), "{1}{6}{7}{10}/{2}{8,9}/{3,4}/{5}");
}

fn stack_example() -> StackFilling {
    filling(
        &[3, 3, 6, 7, 8, 8, 5, 3],
        &[(1, 4), (2, 1), (3, 8), (4, 7), (5, 4), (6, 5), (7, 4), (8, 6)],
    )
}

#[test]
fn stack_boundary() {
    let f = stack_example();
    let d = grow_stack(&f).unwrap();
    assert_eq!(
        d.boundary().to_string(),
        "∅,1,11,21,(1,1,11),2,21,1,(2,2),(1,21),2,1,∅"
    );
    let mut labeled: Vec<(usize, usize, usize)> = d.edge_labels();
    labeled.sort();
    assert_eq!(labeled, vec![(5, 4, 1), (5, 5, 1), (5, 6, 1), (7, 4, 1)]);
    assert_eq!(shrink_stack(f.shape(), &d.boundary()).unwrap(), f);
}

#[test]
fn conjugate_stack_boundary() {
    let f = filling(
        &[3, 3, 6, 7, 8, 8, 5, 3],
        &[(1, 1), (2, 8), (3, 7), (4, 6), (5, 7), (6, 4), (7, 6), (8, 5)],
    );
    let d = grow_stack(&f).unwrap();
    assert_eq!(
        d.boundary().to_string(),
        "∅,1,2,21,(1,1,2),11,21,1,(11,11),(1,21),11,1,∅"
    );
    assert_eq!(d.boundary(), grow_stack(&stack_example()).unwrap().boundary().conjugate());
}

fn big_stack() -> StackFilling {
    filling(
        &[6, 10, 10, 10, 11, 11, 13, 13, 12, 12],
        &[
            (1, 6),
            (2, 3),
            (3, 4),
            (4, 7),
            (5, 9),
            (6, 1),
            (7, 3),
            (8, 6),
            (9, 8),
            (10, 5),
            (11, 5),
            (12, 10),
            (13, 7),
        ],
    )
}

#[test]
fn big_stack_boundary() {
    let f = big_stack();
    let d = grow_stack(&f).unwrap();
    assert_eq!(
        d.boundary().to_string(),
        "∅,1,11,21,31,41,(41,411),411,421,431,(321,331,432,432),(21,32,321^3),31,21,2,21,1,∅"
    );
    assert_eq!(shrink_stack(f.shape(), &d.boundary()).unwrap(), f);
}

#[test]
fn big_stack_intermediate_chains() {
    let d = grow_stack(&big_stack()).unwrap();
    let show = |v: &[hecke_core::Partition]| v.iter().map(|p| p.to_compact()).collect::<Vec<_>>().join(",");
    assert_eq!(show(&d.column(6).right), "∅,1,1,11,21,21,211,311,311,411,411");
    // column 7 starts one row up
    assert_eq!(show(&d.column(7).left), "∅,∅,1,2,2,21,31,31,41,41");
    assert_eq!(show(&d.column(10).right), "∅,∅,1,21,31,321,322,422,432,432");
    assert_eq!(show(&d.column(11).left), "∅,1,11,211,311,321,321");
    assert_eq!(show(&d.column(11).right), "∅,1,11,211,311,321,321");
    let edges: Vec<Option<usize>> = d.column(11).edges[1..].to_vec();
    assert_eq!(edges, vec![Some(1), Some(2), Some(3), Some(3), Some(3), Some(3)]);
    assert_eq!(show(&d.column(12).left), "∅,1,2,21,21");
}
