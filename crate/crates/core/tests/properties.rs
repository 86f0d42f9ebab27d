//! Exhaustive checks over small inputs, each against a slow reference.

use std::collections::{BTreeMap, HashMap};

use hecke_core::applications::{chain_histogram, corner_checks, histogram_is_symmetric};
use hecke_core::growth::rect::{extract_pq, grow_word, rect_boundary, shrink_rectangle};
use hecke_core::growth::rules::{backward, forward};
use hecke_core::growth::validate_boundary;
use hecke_core::oracle::{
    brute_chains, brute_lds, brute_lis, count_fillings, enumerate_fillings, lds, lis, DEFAULT_CAP,
};
use hecke_core::*;

fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| Word::all(k, n)).collect()
}

fn fillings(widths: &[usize]) -> Vec<StackFilling> {
    let shape = StackPolyomino::new(widths.to_vec()).unwrap();
    enumerate_fillings(&shape, DEFAULT_CAP).unwrap().collect()
}

fn assert_local_steps(d: &GrowthDiagram) {
    for c in d.columns() {
        for k in 0..c.left.len() {
            assert!(c.right[k].covers_or_equals(&c.left[k]), "{:?} horizontal at {k}", c.span);
            if k > 0 {
                assert!(c.right[k].is_rook_strip_over(&c.right[k - 1]));
                assert!(c.left[k].is_rook_strip_over(&c.left[k - 1]));
            }
        }
    }
}

#[test]
fn word_filling_roundtrip() {
    for w in all_words(4, 6) {
        let f = StackFilling::from_word(&w);
        assert_eq!(f.to_word(), w);
        let again: StackFilling = f.to_string().parse().unwrap();
        if !w.is_empty() {
            assert_eq!(again, f, "{w}");
        }
    }
}

#[test]
fn conjugation_is_an_involution() {
    for n in 0..=12 {
        for p in Partition::all_of_size(n) {
            let c = p.conjugate();
            assert_eq!(c.size(), n);
            assert_eq!(c.conjugate(), p);
            assert_eq!(c.part(1), p.len());
        }
    }
}

#[test]
fn growth_agrees_with_insertion() {
    for w in all_words(4, 6) {
        let d = grow_word(&w);
        assert_local_steps(&d);
        let (p, q) = extract_pq(&rect_boundary(&d)).unwrap();
        let h = hecke_insert_word(&w);
        assert_eq!(p, h.insertion, "{w}");
        assert_eq!(q, h.recording, "{w}");
    }
}

#[test]
fn insertion_shape_measures_subsequences() {
    for w in all_words(4, 6) {
        let shape = hecke_insert_word(&w).insertion.shape();
        assert_eq!(shape.part(1), brute_lis(&w), "{w}");
        assert_eq!(shape.len(), brute_lds(&w), "{w}");
    }
}

#[test]
fn growth_flag_matches_shape_change() {
    for w in all_words(4, 5) {
        let mut t = IncreasingTableau::empty();
        for &x in w.letters() {
            let (z, step) = hecke_insert(&t, x).unwrap();
            assert_eq!(step.grew, z.num_boxes() == t.num_boxes() + 1, "{w}");
            if !step.grew {
                assert_eq!(z.shape(), t.shape());
                assert!(z.shape().removable_rows().contains(&step.cell.row), "{w}");
            }
            t = z;
        }
    }
}

#[test]
fn reading_word_reinserts_to_itself() {
    for w in all_words(4, 6) {
        let p = hecke_insert_word(&w).insertion;
        assert_eq!(hecke_insert_word(&p.reading_word()).insertion, p, "{w}");
    }
}

#[test]
fn deleting_the_largest_letter_restricts_the_tableau() {
    for w in all_words(4, 6).into_iter().filter(|w| !w.is_empty()) {
        let k = w.max_letter();
        let shorter = Word::new(w.letters().iter().copied().filter(|&a| a < k).collect()).unwrap();
        let p = hecke_insert_word(&w).insertion;
        assert_eq!(hecke_insert_word(&shorter).insertion, p.restrict(k - 1), "{w}");
    }
}

#[test]
fn rectangles_roundtrip() {
    let mut total = 0;
    for (rows, cols) in [(3, 4), (4, 3), (4, 4), (3, 5)] {
        let shape = StackPolyomino::rectangle(rows, cols);
        for f in enumerate_fillings(&shape, DEFAULT_CAP).unwrap() {
            let d = grow_stack(&f).unwrap();
            assert_local_steps(&d);
            let b = rect_boundary(&d);
            b.validate().unwrap();
            let (back, _) = shrink_rectangle(&b).unwrap();
            assert_eq!(back, f);
            total += 1;
        }
    }
    assert_eq!(total, 256 + 125 + 625 + 1024);
}

#[test]
fn local_rules_invert_each_other() {
    let parts: Vec<Partition> = (0..=8).flat_map(Partition::all_of_size).collect();
    let mut squares = 0;
    for lambda in &parts {
        for upsilon in parts.iter().filter(|u| u.covers_or_equals(lambda)) {
            for mu in parts.iter().filter(|m| m.is_rook_strip_over(lambda)) {
                let mut labels = vec![None];
                if upsilon == lambda {
                    labels.extend(lambda.removable_rows().into_iter().map(Some));
                }
                for bottom in labels {
                    for x in [false, true] {
                        let Ok(f) = forward(lambda, upsilon, mu, bottom, x) else { continue };
                        let b = backward(mu, &f.gamma, upsilon, f.top)
                            .unwrap_or_else(|e| panic!("{lambda} {upsilon} {mu} {bottom:?} {x} -> {} {:?} {}: {e}", f.gamma, f.top, f.rule));
                        assert_eq!(
                            (&b.lambda, b.bottom, b.x),
                            (lambda, bottom, x),
                            "{lambda} {upsilon} {mu} {bottom:?} {x}"
                        );
                        squares += 1;
                    }
                }
            }
        }
    }
    println!("{squares} squares");
    assert!(squares > 1000);
}

#[test]
fn jdt_map_is_inverted_by_its_shape() {
    let all = IncreasingTableau::enumerate_straight(8, 5);
    assert!(all.len() > 100);
    for t in all {
        let m = jdt_map(&t).unwrap();
        assert!(m.is_straight());
        assert_eq!(jdt_map_inverse(&m, &t.shape()).unwrap(), t, "{t}");
    }
}

/// Guide tableau whose `i`-boxes are the boxes vacated by the `(m + 1 - i)`-th jdt map of `T`.
fn vacated_guide(t: &IncreasingTableau, m: usize) -> IncreasingTableau {
    let mut label: HashMap<TabCell, usize> = HashMap::new();
    let mut cur = t.clone();
    for i in (1..=m).rev() {
        let next = jdt_map(&cur).unwrap();
        for c in cur.shape().skew_boxes(&next.shape()) {
            label.insert(c, i);
        }
        cur = next;
    }
    let shape = t.shape();
    let rows = (1..=shape.len())
        .map(|r| (1..=shape.part(r)).map(|c| label[&TabCell::new(r, c)]).collect())
        .collect();
    IncreasingTableau::straight(rows).unwrap()
}

#[test]
fn guided_rectification_matches_iterated_jdt() {
    let mut checked = 0;
    for p in IncreasingTableau::enumerate_straight(7, 5) {
        for m in 1..=p.max_entry() {
            let t = p.restrict(m);
            let u = vacated_guide(&t, m);
            let rect = rectify_with(&u, &p.skew_above(m)).unwrap();
            let mut iter = p.clone();
            for _ in 0..m {
                iter = jdt_map(&iter).unwrap();
            }
            assert_eq!(rect.map_entries(|v| v - m), iter, "{p} m={m} u={u}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn deleting_one_from_a_permutation_is_the_jdt_map() {
    for n in 1..=6 {
        for pi in permutations(n) {
            let w = Word::new(pi.clone()).unwrap();
            let rest = Word::new(pi.iter().filter(|&&a| a > 1).map(|a| a - 1).collect()).unwrap();
            let p = hecke_insert_word(&w).insertion;
            assert_eq!(hecke_insert_word(&rest).insertion, jdt_map(&p).unwrap(), "{w}");
        }
    }
}

fn stack_roundtrip(widths: &[usize]) -> usize {
    let shape = StackPolyomino::new(widths.to_vec()).unwrap();
    let mut seen = BTreeMap::new();
    let mut n = 0;
    for f in enumerate_fillings(&shape, DEFAULT_CAP).unwrap() {
        let d = grow_stack(&f).unwrap();
        let b = d.boundary();
        validate_boundary(&shape, &b).unwrap();
        assert_eq!(shrink_stack(&shape, &b).unwrap(), f);
        assert!(seen.insert(b.to_string(), f.to_string()).is_none(), "two fillings share {b}");
        n += 1;
    }
    assert_eq!(n as u128, count_fillings(&shape));
    n
}

#[test]
fn stack_bijection_small_shapes() {
    assert_eq!(stack_roundtrip(&[2, 3, 3, 2]), 75);
    assert_eq!(stack_roundtrip(&[3, 2, 1]), 24);
    for widths in [&[1][..], &[2, 1], &[1, 2], &[2, 3, 1], &[1, 3, 2, 2], &[2, 4, 3, 1], &[3, 4, 4, 2]] {
        stack_roundtrip(widths);
    }
}

#[test]
fn corrupted_boundaries_are_rejected() {
    let shape = StackPolyomino::new(vec![2, 3, 3, 2]).unwrap();
    let valid: std::collections::HashSet<String> = enumerate_fillings(&shape, DEFAULT_CAP)
        .unwrap()
        .map(|f| grow_stack(&f).unwrap().boundary().to_string())
        .collect();
    let mut tried = 0;
    for f in enumerate_fillings(&shape, DEFAULT_CAP).unwrap() {
        let b = grow_stack(&f).unwrap().boundary();
        for i in 0..b.0.len() {
            for p in (1..=3).flat_map(Partition::all_of_size) {
                let mut bad = b.clone();
                let last = bad.0[i].partitions.len() - 1;
                bad.0[i].partitions[last] = p;
                if valid.contains(&bad.to_string()) {
                    continue;
                }
                tried += 1;
                match shrink_stack(&shape, &bad) {
                    Err(e) => assert!(e.is_image_error(), "{bad}: {e}"),
                    Ok(g) => panic!("{bad} shrank to {g}"),
                }
            }
        }
    }
    assert!(tried > 1000);
}

#[test]
fn chain_dp_matches_subsets() {
    for widths in [&[2, 3, 3, 2][..], &[3, 2, 1], &[2, 4, 3, 3, 1], &[4, 4, 4]] {
        for f in fillings(widths) {
            assert_eq!((longest_ne_chain(&f), longest_se_chain(&f)), brute_chains(&f), "{f}");
        }
    }
}

#[test]
fn corner_labels_see_chains() {
    for widths in [&[2, 3, 3, 2][..], &[3, 2, 1], &[2, 4, 3, 3, 1]] {
        for f in fillings(widths) {
            for c in corner_checks(&f, brute_lis, brute_lds).unwrap() {
                assert!(c.chains_match(), "{f} at {:?}: {} vs word {}", c.corner, c.label, c.word);
            }
        }
    }
}

#[test]
fn shapes_may_differ_while_chains_agree() {
    let shape = StackPolyomino::new(vec![6, 7, 7, 7, 7]).unwrap();
    let ones = [(1, 2), (2, 4), (3, 1), (4, 2), (5, 5), (6, 3), (7, 2)];
    let cells: Vec<FillCell> = ones.iter().map(|&(c, r)| FillCell::new(c, r)).collect();
    let f = StackFilling::from_cells(shape, &cells).unwrap();
    let checks = corner_checks(&f, lis, lds).unwrap();
    let c = checks.iter().find(|c| c.corner == (7, 5)).unwrap();
    assert_eq!(c.label, "3,2,1".parse().unwrap());
    assert_eq!(c.word, word!("131421"));
    assert_eq!(c.insertion_shape, "3,1,1".parse().unwrap());
    assert!(c.chains_match());
    assert!(checks.iter().all(|c| c.chains_match()));
}

#[test]
fn symmetry_on_small_shapes() {
    for widths in [&[2, 3, 3, 2][..], &[3, 2, 1], &[2, 4, 3, 3, 1]] {
        let all = fillings(widths);
        assert!(histogram_is_symmetric(&chain_histogram(&all)));
        for f in &all {
            let g = symmetry_involution(f).unwrap();
            assert_eq!(symmetry_involution(&g).unwrap(), *f);
            let rows = |h: &StackFilling| {
                h.ones().iter().map(|c| c.row).collect::<std::collections::BTreeSet<_>>()
            };
            assert_eq!(rows(&g), rows(f));
            let cols = |h: &StackFilling| h.column_rows().iter().map(Option::is_some).collect::<Vec<_>>();
            assert_eq!(cols(&g), cols(f));
            assert_eq!(longest_ne_chain(&g), longest_se_chain(f));
            assert_eq!(longest_se_chain(&g), longest_ne_chain(f));
        }
    }
}

/// All families of subsets of `[n]` covering it whose pairs are nearly disjoint, from the definition.
fn brute_linked(n: usize) -> Vec<Vec<Vec<usize>>> {
    let subsets: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|m| (1..=n).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect();
    let nearly_disjoint = |a: &[usize], b: &[usize]| {
        a.iter().filter(|t| b.contains(t)).all(|&t| {
            (t == a[0] && a.len() > 1 && t != b[0]) || (t == b[0] && b.len() > 1 && t != a[0])
        })
    };
    let mut out = vec![];
    fn go(
        i: usize,
        subsets: &[Vec<usize>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
        n: usize,
        ok: &dyn Fn(&[usize], &[usize]) -> bool,
    ) {
        if i == subsets.len() {
            let mut covered = vec![false; n + 1];
            for &c in chosen.iter() {
                for &x in &subsets[c] {
                    covered[x] = true;
                }
            }
            if covered[1..].iter().all(|&c| c) {
                out.push(chosen.iter().map(|&c| subsets[c].clone()).collect());
            }
            return;
        }
        go(i + 1, subsets, chosen, out, n, ok);
        if chosen.iter().all(|&c| ok(&subsets[c], &subsets[i])) {
            chosen.push(i);
            go(i + 1, subsets, chosen, out, n, ok);
            chosen.pop();
        }
    }
    go(0, &subsets, &mut vec![], &mut out, n, &nearly_disjoint);
    out
}

#[test]
fn linked_partitions_match_the_definition() {
    for n in 1..=4 {
        let mut from_def: Vec<String> = brute_linked(n)
            .into_iter()
            .map(|b| LinkedPartition::new(n, b).unwrap().to_string())
            .collect();
        from_def.sort();
        let mut from_fillings: Vec<String> = LinkedPartition::all(n).iter().map(|p| p.to_string()).collect();
        from_fillings.sort();
        assert_eq!(from_fillings, from_def, "n={n}");
    }
}

#[test]
fn linked_partitions_crossings_and_nestings() {
    let mut factorial = 1;
    for n in 1..=6 {
        factorial *= n;
        let all = LinkedPartition::all(n);
        assert_eq!(all.len(), factorial);
        let mut counts: BTreeMap<_, i64> = BTreeMap::new();
        for p in &all {
            let f = p.to_triangle();
            assert_eq!(LinkedPartition::from_triangle(&f).unwrap(), *p);
            assert_eq!(p.cross(), longest_se_chain(&f));
            assert_eq!(p.nest(), longest_ne_chain(&f));
            *counts.entry((p.cross(), p.nest(), p.compl(), p.compr())).or_default() += 1;
            let q = LinkedPartition::from_triangle(&symmetry_involution(&f).unwrap()).unwrap();
            assert_eq!((q.cross(), q.nest()), (p.nest(), p.cross()));
            assert_eq!((q.compl(), q.compr()), (p.compl(), p.compr()));
        }
        for ((x, y, s, t), c) in &counts {
            let swapped = counts.get(&(*y, *x, s.clone(), t.clone())).copied().unwrap_or(0);
            assert_eq!(*c, swapped, "n={n} cross={x} nest={y}");
        }
    }
}

#[test]
fn dp_subsequences_match_subsets() {
    for w in all_words(5, 7) {
        assert_eq!((lis(&w), lds(&w)), (brute_lis(&w), brute_lds(&w)), "{w}");
    }
}
