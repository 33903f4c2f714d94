use operad_core::algebra::{
    apply, bareiss, frac, is_zero_vec, kernel, quotient_dim, rank, rat, BigInt, Rational, SparseMatrix, Subspace, Zero,
};
use proptest::prelude::*;

/// Textbook Gauss-Jordan rank, kept independent of the library code.
fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

fn dense(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

proptest! {
    #[test]
    fn rank_matches_naive_elimination(m in small_matrix()) {
        let d = dense(&m);
        prop_assert_eq!(rank(&SparseMatrix::from_dense(&d)), naive_rank(&d));
    }

    #[test]
    fn rank_plus_nullity_is_row_count(m in small_matrix()) {
        let s = SparseMatrix::from_dense(&dense(&m));
        prop_assert_eq!(rank(&s) + kernel(&s).dim(), s.rows());
    }

    #[test]
    fn kernel_vectors_annihilate(m in small_matrix()) {
        let s = SparseMatrix::from_dense(&dense(&m));
        for v in kernel(&s).basis() {
            prop_assert!(is_zero_vec(&apply(v, &s)));
        }
    }

    #[test]
    fn transpose_preserves_rank(m in small_matrix()) {
        let s = SparseMatrix::from_dense(&dense(&m));
        prop_assert_eq!(rank(&s), rank(&s.transpose()));
    }

    #[test]
    fn bareiss_rank_agrees(m in small_matrix()) {
        let ints: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        prop_assert_eq!(bareiss(ints).rank, naive_rank(&dense(&m)));
    }
}

#[test]
fn kernel_of_small_example() {
    // x·m = 0 with m = [[1, 1], [1, 1], [0, 1]] is spanned by (1, -1, 0)
    let m = SparseMatrix::from_dense(&dense(&[vec![1, 1], vec![1, 1], vec![0, 1]]));
    let k = kernel(&m);
    assert_eq!(k.dim(), 1);
    assert!(k.contains_vector(&[rat(1), rat(-1), rat(0)]));
}

#[test]
fn fractions_stay_exact() {
    let m = SparseMatrix::from_dense(&[vec![frac(1, 3), frac(2, 3)], vec![frac(1, 2), rat(1)]]);
    assert_eq!(rank(&m), 1);
    let k = kernel(&m);
    assert!(k.contains_vector(&[rat(3), frac(-2, 1)]));
}

#[test]
fn subspace_operations() {
    let a = Subspace::from_spanning(3, vec![vec![rat(1), rat(0), rat(0)]]);
    let b = Subspace::from_spanning(3, vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(0)]]);
    assert!(b.contains(&a));
    assert!(!a.contains(&b));
    assert_eq!(a.sum(&b).dim(), 2);
    assert_eq!(quotient_dim(&b, &a).unwrap(), 1);
    assert!(quotient_dim(&a, &b).is_err());
}

#[test]
fn zero_entries_are_not_stored() {
    let mut m = SparseMatrix::zeros(2, 2);
    m.set(0, 0, rat(2));
    m.add(0, 0, &rat(-2));
    assert_eq!(m.nnz(), 0);
}
