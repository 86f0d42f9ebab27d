use hecke_core::applications::corner_checks;
use hecke_core::growth::rect::{extract_pq, grow_word, rect_boundary};
use hecke_core::growth::validate_boundary;
use hecke_core::oracle::{brute_chains, lds, lis};
use hecke_core::*;
use proptest::prelude::*;

/// Unimodal widths: an increasing run followed by a decreasing one.
fn stack_shape() -> impl Strategy<Value = StackPolyomino> {
    (prop::collection::vec(1usize..=7, 1..=7), any::<prop::sample::Index>()).prop_map(|(mut v, cut)| {
        let k = cut.index(v.len() + 1);
        v[..k].sort();
        v[k..].sort_by(|a, b| b.cmp(a));
        StackPolyomino::new(v).unwrap()
    })
}

fn stack_filling() -> impl Strategy<Value = StackFilling> {
    stack_shape().prop_flat_map(|shape| {
        let n = shape.ncols();
        (Just(shape), prop::collection::vec(any::<prop::sample::Index>(), n)).prop_map(|(shape, picks)| {
            let rows = picks
                .iter()
                .enumerate()
                .map(|(j, p)| {
                    let span = shape.column(j + 1);
                    let d = p.index(span.height() + 1);
                    (d > 0).then_some(span.bottom + d)
                })
                .collect();
            StackFilling::from_columns(shape, rows).unwrap()
        })
    })
}

fn word(max_letter: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=max_letter, 0..=max_len).prop_map(|v| Word::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn stack_roundtrip(f in stack_filling()) {
        let d = grow_stack(&f).unwrap();
        let b = d.boundary();
        validate_boundary(f.shape(), &b).unwrap();
        prop_assert_eq!(shrink_stack(f.shape(), &b).unwrap(), f.clone());
        let json = b.to_json();
        prop_assert_eq!(Boundary::from_json(&json).unwrap(), b);
    }

    #[test]
    fn corners_see_chains(f in stack_filling()) {
        for c in corner_checks(&f, lis, lds).unwrap() {
            prop_assert!(c.chains_match(), "{} at {:?}", f, c.corner);
        }
    }

    #[test]
    fn involution_swaps_chains(f in stack_filling()) {
        let g = symmetry_involution(&f).unwrap();
        prop_assert_eq!(symmetry_involution(&g).unwrap(), f.clone());
        prop_assert_eq!(longest_ne_chain(&g), longest_se_chain(&f));
        prop_assert_eq!(longest_se_chain(&g), longest_ne_chain(&f));
        if f.ones().len() <= 12 {
            prop_assert_eq!((longest_ne_chain(&f), longest_se_chain(&f)), brute_chains(&f));
        }
    }

    #[test]
    fn growth_matches_insertion(w in word(8, 14)) {
        let (p, q) = extract_pq(&rect_boundary(&grow_word(&w))).unwrap();
        let h = hecke_insert_word(&w);
        prop_assert_eq!(&p, &h.insertion);
        prop_assert_eq!(q, h.recording);
        prop_assert_eq!(p.shape().part(1), lis(&w));
        prop_assert_eq!(p.shape().len(), lds(&w));
    }

    #[test]
    fn jdt_map_roundtrip(w in word(7, 12)) {
        let p = hecke_insert_word(&w).insertion;
        let m = jdt_map(&p).unwrap();
        prop_assert_eq!(jdt_map_inverse(&m, &p.shape()).unwrap(), p);
    }

    #[test]
    fn text_forms_roundtrip(f in stack_filling(), w in word(12, 10)) {
        let p = hecke_insert_word(&w).insertion;
        prop_assert_eq!(p.to_string().parse::<IncreasingTableau>().unwrap(), p.clone());
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        prop_assert_eq!(f.shape().to_string().parse::<StackPolyomino>().unwrap(), f.shape().clone());
    }
}
