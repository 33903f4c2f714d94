//! Exact rational scalars, sparse matrices and subspaces.
//!
//! Vectors are rows: the kernel of a matrix `m` is `{x : x·m = 0}`, so a
//! kernel vector is a combination of row labels.

mod elim;
mod matrix;
mod subspace;

pub use elim::{bareiss, kernel, rank, rref, BareissOutcome};
pub use matrix::SparseMatrix;
pub use subspace::{quotient_dim, quotient_representatives, Subspace};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
pub use num_traits::{One, Signed, Zero};

use alloc::vec::Vec;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Scales `v` so that its first nonzero entry is one.
pub fn normalize(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x = &*x / &lead;
            }
        }
    }
}

/// `v·m` for a dense row vector.
pub fn apply(v: &[Rational], m: &SparseMatrix) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); m.cols()];
    for ((r, c), x) in m.entries() {
        if !v[*r].is_zero() {
            out[*c] += &v[*r] * x;
        }
    }
    out
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
