mod common;

use std::collections::BTreeMap;

use operad_core::algebra::{rat, SparseMatrix};
use operad_core::graphs::{bipartite, tel_a, TelAKind};
use operad_core::presentation::RelationModule;
use operad_core::trees::parse_tree;
use operad_core::words::{
    cyclic_reduce, decorate, decorate_entries, derive_equations, format_word, free_reduce, free_reduce_from_right,
    inverse, quantized_entries, word_equivalent, word_of, CoeffSymbol, Word, WordEquation,
};
use proptest::prelude::*;

fn sym(s: &str) -> CoeffSymbol {
    CoeffSymbol::plain(s)
}

/// `"a b^ c"` with `^` marking an inverse letter.
fn word(text: &str) -> Word {
    text.split_whitespace()
        .map(|t| match t.strip_suffix('^') {
            Some(b) => (sym(b), -1),
            None => (sym(t), 1),
        })
        .collect()
}

fn ints(rows: &[&[i64]]) -> SparseMatrix {
    SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>())
}

fn eq(text: &str) -> WordEquation {
    WordEquation::new(word(text), 0)
}

#[test]
fn free_and_cyclic_reduction() {
    assert_eq!(free_reduce(&word("a a^ b")), word("b"));
    assert_eq!(free_reduce(&word("a b b^ a^")), word(""));
    assert_eq!(free_reduce(&word("a b^ b c")), word("a c"));
    assert_eq!(cyclic_reduce(&word("a b a^")), word("b"));
    assert_eq!(cyclic_reduce(&word("a b c")), word("a b c"));
    assert_eq!(inverse(&word("a b^")), word("b a^"));
}

#[test]
fn equivalence_up_to_rotation_and_inversion() {
    assert!(word_equivalent(&eq("a b c"), &eq("b c a")));
    assert!(word_equivalent(&eq("a b c"), &eq("c^ b^ a^")));
    assert!(!word_equivalent(&eq("a b"), &eq("b a^")));
    assert!(!word_equivalent(&eq("a b c"), &eq("a c b")));
    assert!(word_equivalent(&eq("a x x^ b"), &eq("b a")));
}

#[test]
fn identity_symbols_are_dropped() {
    let w = word_of(&[sym("1"), CoeffSymbol::new("1", "1⊗_"), sym("a")]);
    assert_eq!(w, word("a"));
    assert_eq!(format_word(&[]), "1");
}

#[test]
fn rendering() {
    let d = CoeffSymbol::new("Phi", "(Δ⊗1⊗1)(_)");
    assert_eq!(d.to_string(), "(Δ⊗1⊗1)(Phi)");
    assert_eq!(d.inverted().to_string(), "[(Δ⊗1⊗1)(Phi)]^-1");
    assert_eq!(sym("a").inverted().to_string(), "a^-1");
    assert_eq!(format_word(&word("a b^")), "a · b^-1");
    assert_eq!(eq("a b").to_string(), "a · b = 1");
}

#[test]
fn two_sided_form_balances() {
    let e = eq("a b c^ d^");
    let (l, r) = e.two_sided();
    assert_eq!(l, word("a b"));
    assert_eq!(r, word("d c"));
    let mut back = l.clone();
    back.extend(inverse(&r));
    assert!(word_equivalent(&WordEquation::new(back, 0), &e));
}

#[test]
fn forests_give_no_equations() {
    let m = ints(&[&[1, -1, 0], &[0, 1, -1]]);
    let g = tel_a(&bipartite(&m), TelAKind::Graphlike).unwrap().orient().unwrap();
    let dg = decorate(&g, &[Some(sym("a")), Some(sym("b"))]).unwrap();
    assert!(derive_equations(&dg).is_empty());
}

#[test]
fn missing_labels_are_reported() {
    let rm = RelationModule::new(&common::ass()).unwrap();
    let pm = rm.assemble_pi(4);
    let g = tel_a(&bipartite(&pm.matrix), TelAKind::Dual).unwrap().orient().unwrap();
    assert!(decorate(&g, &vec![None; 5]).is_err());
    assert!(decorate_entries(&g, &BTreeMap::new()).is_err());
    // unoriented graphs cannot be decorated
    let u = tel_a(&bipartite(&pm.matrix), TelAKind::Dual).unwrap();
    assert!(decorate(&u, &vec![Some(sym("a")); 5]).is_err());
}

#[test]
fn square_of_generators() {
    // a 4-cycle decorated a, b, c, d gives one equation in those letters
    let m = ints(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1], &[-1, 0, 0, 1]]);
    let g = tel_a(&bipartite(&m), TelAKind::Graphlike).unwrap().orient().unwrap();
    let dg = decorate(&g, &["a", "b", "c", "d"].map(|s| Some(sym(s)))).unwrap();
    let eqs = derive_equations(&dg);
    assert_eq!(eqs.len(), 1);
    let mut letters: Vec<String> = eqs[0].word.iter().map(|(s, _)| s.base.clone()).collect();
    letters.sort();
    assert_eq!(letters, ["a", "b", "c", "d"]);
}

#[test]
fn quantized_associativity_gives_the_pentagon_identity() {
    let rm = RelationModule::new(&common::ass()).unwrap();
    let pm = rm.assemble_pi(4);
    let term = parse_tree("x(1,x(2,3))", &rm.generators).unwrap();
    let bases = BTreeMap::from([(("r".to_string(), term), "Phi".to_string())]);
    let entries = quantized_entries(&rm, &pm, &bases).unwrap();
    assert_eq!(entries.len(), 10);
    let g = tel_a(&bipartite(&pm.matrix), TelAKind::Dual).unwrap().orient().unwrap();
    let eqs = derive_equations(&decorate_entries(&g, &entries).unwrap());
    assert_eq!(eqs.len(), 1);
    let pentagon = WordEquation::new(
        [
            ("Phi", "1⊗_", 1),
            ("Phi", "(1⊗Δ⊗1)(_)", 1),
            ("Phi", "_⊗1", 1),
            ("Phi", "(Δ⊗1⊗1)(_)", -1),
            ("Phi", "(1⊗1⊗Δ)(_)", -1),
        ]
        .iter()
        .map(|&(b, d, e)| (CoeffSymbol::new(b, d), e))
        .collect(),
        0,
    );
    assert!(word_equivalent(&eqs[0], &pentagon), "{}", eqs[0]);
}

#[test]
fn quantized_entries_need_planar_presentations() {
    let rm = RelationModule::new(&common::lie()).unwrap();
    let pm = rm.assemble_pi(4);
    assert!(quantized_entries(&rm, &pm, &BTreeMap::new()).is_err());
}

fn letters() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..4, prop::bool::ANY), 0..24)
        .prop_map(|v| v.into_iter().map(|(i, inv)| (sym(["a", "b", "c", "d"][i]), if inv { -1 } else { 1 })).collect())
}

proptest! {
    #[test]
    fn reduction_is_confluent(w in letters()) {
        let r = free_reduce(&w);
        prop_assert_eq!(&r, &free_reduce_from_right(&w));
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(r.windows(2).all(|p| !(p[0].0 == p[1].0 && p[0].1 == -p[1].1)));
    }

    #[test]
    fn word_times_inverse_is_trivial(w in letters()) {
        let mut v = w.clone();
        v.extend(inverse(&w));
        prop_assert!(free_reduce(&v).is_empty());
    }

    #[test]
    fn rotations_are_equivalent(w in letters(), k in 0usize..24) {
        let mut r = w.clone();
        if !r.is_empty() {
            let k = k % r.len();
            r.rotate_left(k);
        }
        prop_assert!(word_equivalent(&WordEquation::new(w, 0), &WordEquation::new(r, 0)));
    }
}
