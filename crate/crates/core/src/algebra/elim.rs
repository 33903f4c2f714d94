use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, SparseMatrix, Subspace};

/// Result of fraction-free elimination on an integer matrix.
#[derive(Debug, Clone)]
pub struct BareissOutcome {
    pub rank: usize,
    /// Row echelon form with integer entries.
    pub echelon: Vec<Vec<BigInt>>,
    /// Pivot column of each nonzero echelon row.
    pub pivots: Vec<usize>,
    /// Every division performed was exact.
    pub exact: bool,
}

/// Bareiss elimination. Pivot is the first nonzero entry of the column at or
/// below the current row.
pub fn bareiss(mut a: Vec<Vec<BigInt>>) -> BareissOutcome {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    let mut exact = true;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let piv_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let num = &piv_row[c] * &row[j] - &row[c] * &piv_row[j];
                let (q, rem) = num.div_rem(&prev);
                exact &= rem.is_zero();
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    BareissOutcome { rank: r, echelon: a, pivots, exact }
}

/// Clears denominators row by row.
fn integer_rows(m: &SparseMatrix) -> Vec<Vec<BigInt>> {
    let dense = m.to_dense();
    dense
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

pub fn rank(m: &SparseMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    // Eliminate along the shorter side.
    if m.rows() > m.cols() {
        bareiss(integer_rows(&m.transpose())).rank
    } else {
        bareiss(integer_rows(m)).rank
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let piv = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&piv).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    pivots
}

/// Left kernel `{x : x·m = 0}`.
pub fn kernel(m: &SparseMatrix) -> Subspace {
    let n = m.rows();
    let mut t = m.transpose().to_dense();
    let pivots = rref(&mut t);
    let mut basis = Vec::new();
    let mut is_pivot = alloc::vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = alloc::vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (row, &p) in t.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -row[free].clone();
            }
        }
        basis.push(v);
    }
    Subspace::from_spanning(n, basis)
}
