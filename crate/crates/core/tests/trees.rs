mod common;

use operad_core::algebra::{rat, Rational};
use operad_core::presentation::RelationModule;
use operad_core::trees::{act, canonicalize, compose, parse_tree, perm_sign, permutations, Mode, Tree};
use proptest::prelude::*;

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn double_factorial_odd(n: usize) -> usize {
    (1..=n).step_by(2).product()
}

#[test]
fn planar_binary_trees_are_catalan() {
    let rm = RelationModule::new(&common::ass()).unwrap();
    for n in 2..=7 {
        assert_eq!(rm.tree_basis(n).len(), catalan(n - 1), "n = {n}");
    }
    assert_eq!(rm.tree_basis(4).len(), 5);
    assert_eq!(rm.tree_basis(5).len(), 14);
    assert_eq!(rm.tree_basis(6).len(), 42);
}

#[test]
fn symmetric_binary_trees_are_odd_double_factorials() {
    for p in [common::lie(), common::comm()] {
        let rm = RelationModule::new(&p).unwrap();
        for n in 2..=6 {
            assert_eq!(rm.tree_basis(n).len(), double_factorial_odd(2 * n - 3), "{} n = {n}", p.name);
        }
    }
    let rm = RelationModule::new(&common::lie()).unwrap();
    let counts: Vec<usize> = (3..=5).map(|n| rm.tree_basis(n).len()).collect();
    assert_eq!(counts, [3, 15, 105]);
}

#[test]
fn two_planar_operations_double_each_vertex() {
    let rm = RelationModule::new(&common::ns_poisson()).unwrap();
    for n in 2..=5 {
        assert_eq!(rm.tree_basis(n).len(), catalan(n - 1) << (n - 1));
    }
}

#[test]
fn ternary_trees() {
    // planar ternary trees with k vertices: C(3k, k) / (2k + 1)
    let rm = RelationModule::new(&common::ainfty()).unwrap();
    assert_eq!(rm.tree_basis(3).len(), 1);
    assert_eq!(rm.tree_basis(5).len(), 3);
    assert_eq!(rm.tree_basis(7).len(), 12);
}

#[test]
fn display_parses_back() {
    for p in [common::ass(), common::lie(), common::digebra(), common::ainfty()] {
        let rm = RelationModule::new(&p).unwrap();
        for n in [3, 4, 5] {
            for t in rm.tree_basis(n) {
                assert_eq!(parse_tree(&t.to_string(), &rm.generators).unwrap(), t);
            }
        }
    }
}

#[test]
fn antisymmetric_swap_changes_sign() {
    let rm = RelationModule::new(&common::lie()).unwrap();
    let t = parse_tree("x(2,1)", &rm.generators).unwrap();
    let (c, s) = canonicalize(&t, Mode::Symmetric);
    assert_eq!(c.to_string(), "x(1,2)");
    assert_eq!(s, -1);
    let rm = RelationModule::new(&common::comm()).unwrap();
    let t = parse_tree("y(y(3,2),1)", &rm.generators).unwrap();
    let (c, s) = canonicalize(&t, Mode::Symmetric);
    assert_eq!(c.to_string(), "y(1,y(2,3))");
    assert_eq!(s, 1);
}

#[test]
fn permutations_are_lexicographic() {
    let p = permutations(3);
    assert_eq!(p.len(), 6);
    assert_eq!(p[0], [1, 2, 3]);
    assert_eq!(p[5], [3, 2, 1]);
    assert_eq!(p.iter().map(|s| perm_sign(s)).sum::<i32>(), 0);
}

#[test]
fn action_composes() {
    let rm = RelationModule::new(&common::lie()).unwrap();
    let perms = permutations(4);
    for t in rm.tree_basis(4) {
        for s in &perms {
            for u in &perms {
                let (a, sa) = act(&t, s, Mode::Symmetric);
                let (b, sb) = act(&a, u, Mode::Symmetric);
                let us: Vec<u32> = s.iter().map(|&i| u[i as usize - 1]).collect();
                let (c, sc) = act(&t, &us, Mode::Symmetric);
                assert_eq!((b, sa * sb), (c, sc));
            }
        }
    }
}

fn degree_sign(a: &Tree, b: &Tree) -> Rational {
    rat(if (a.degree() * b.degree()) % 2 == 0 { 1 } else { -1 })
}

/// Checks sequential and parallel associativity of partial composition.
fn check_associativity(rm: &RelationModule, max_arity: usize) {
    let mode = rm.mode();
    let gens: Vec<Tree> = (2..=3).flat_map(|n| rm.tree_basis(n)).filter(|t| t.vertex_count() == 1).collect();
    let mids: Vec<Tree> = (2..=max_arity).flat_map(|n| rm.tree_basis(n)).filter(|t| t.vertex_count() <= 2).collect();
    for a in &gens {
        for b in &mids {
            for c in &gens {
                let (p, q, r) = (a.arity(), b.arity(), c.arity());
                if p + q + r - 2 > max_arity {
                    continue;
                }
                for i in 1..=p {
                    let (ab, s1) = compose(a, i, b, mode).unwrap();
                    for j in i..i + q {
                        let (lhs, s2) = compose(&ab, j, c, mode).unwrap();
                        let (bc, s3) = compose(b, j - i + 1, c, mode).unwrap();
                        let (rhs, s4) = compose(a, i, &bc, mode).unwrap();
                        assert_eq!(lhs, rhs);
                        assert_eq!(&s1 * &s2, &s3 * &s4, "{a} {i} {b} {j} {c}");
                    }
                    for k in (1..=p).filter(|&k| k != i) {
                        let j = if k < i { k } else { k + q - 1 };
                        let (lhs, s2) = compose(&ab, j, c, mode).unwrap();
                        let (ac, s3) = compose(a, k, c, mode).unwrap();
                        let i2 = if k < i { i + r - 1 } else { i };
                        let (rhs, s4) = compose(&ac, i2, b, mode).unwrap();
                        assert_eq!(lhs, rhs);
                        // moving c past b costs the Koszul sign
                        let koszul = degree_sign(b, c);
                        assert_eq!(&s1 * &s2, &s3 * &s4 * koszul, "{a} {i} {b} {k} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn composition_is_associative() {
    for p in [common::ass(), common::lie(), common::comm(), common::ns_poisson()] {
        check_associativity(&RelationModule::new(&p).unwrap(), 5);
    }
}

#[test]
fn graded_composition_is_associative() {
    check_associativity(&RelationModule::new(&common::ainfty()).unwrap(), 7);
}

#[test]
fn slot_out_of_range() {
    let rm = RelationModule::new(&common::ass()).unwrap();
    let x = &rm.tree_basis(2)[0];
    assert!(compose(x, 3, x, Mode::NonSigma).is_err());
    assert!(compose(x, 0, x, Mode::NonSigma).is_err());
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(t in 0usize..105, s in 0usize..120) {
        let rm = RelationModule::new(&common::lie()).unwrap();
        let trees = rm.tree_basis(5);
        let (a, _) = act(&trees[t], &permutations(5)[s], Mode::Symmetric);
        let (b, sign) = canonicalize(&a, Mode::Symmetric);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(sign, 1);
    }

    #[test]
    fn action_permutes_the_basis(s in 0usize..120) {
        let rm = RelationModule::new(&common::comm()).unwrap();
        let basis = rm.tree_basis(5);
        let sigma = &permutations(5)[s];
        let mut image: Vec<Tree> = basis.iter().map(|t| act(t, sigma, Mode::Symmetric).0).collect();
        image.sort();
        let mut sorted = basis.clone();
        sorted.sort();
        prop_assert_eq!(image, sorted);
    }
}

#[test]
fn parse_errors_carry_columns() {
    use operad_core::error::Error;
    let rm = RelationModule::new(&common::ass()).unwrap();
    let col = |s: &str| match parse_tree(s, &rm.generators) {
        Err(Error::Parse { col, .. }) => col,
        other => panic!("expected a parse error for {s}, got {other:?}"),
    };
    assert_eq!(col("x(1,"), 5);
    assert_eq!(col("y(1,2)"), 1);
    assert_eq!(col("x(1,2,3)"), 1);
    assert_eq!(col("x(1,3)"), 7);
    assert_eq!(col("x(0,1)"), 4);
    assert!(parse_tree("x(1,2) x", &rm.generators).is_err());
}

#[test]
fn elements_with_rational_coefficients() {
    use operad_core::algebra::frac;
    use operad_core::trees::parse_element;
    let rm = RelationModule::new(&common::ass()).unwrap();
    let e = parse_element("x(x(1,2),3) - 1/2*x(1,x(2,3)) + 3/2*x(1,x(2,3))", &rm.generators).unwrap();
    let coeffs: Vec<Rational> = e.iter().map(|(_, c)| c.clone()).collect();
    assert_eq!(e.len(), 2);
    // -1/2 + 3/2 collapses to 1
    assert_eq!(coeffs, [rat(1), rat(1)]);
    let half = parse_element("1/2*x(1,2)", &rm.generators).unwrap();
    assert_eq!(half.iter().next().unwrap().1, &frac(1, 2));
    assert!(parse_element("x(1,2) - x(1,2)", &rm.generators).unwrap().is_zero());
    assert!(parse_element("x(1,2) - x(x(1,2),3)", &rm.generators).is_err());
}
