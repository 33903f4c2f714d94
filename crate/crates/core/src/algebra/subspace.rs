use alloc::vec::Vec;

use num_traits::Zero;

use super::{elim::rref, Rational};
use crate::error::{Error, Result};

/// A subspace of `Q^ambient_dim`, stored as a reduced row echelon basis so
/// that equal subspaces have equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = alloc::vec![Rational::zero(); ambient_dim];
                v[i] = super::rat(1);
                v
            })
            .collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        let mut basis = vectors;
        for v in &basis {
            assert_eq!(v.len(), ambient_dim, "vector length does not match ambient dimension");
        }
        let pivots = rref(&mut basis);
        Subspace { ambient_dim, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after clearing this subspace's pivot columns.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient_dim, vs)
    }

    pub fn extend(&self, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(vectors);
        Subspace::from_spanning(self.ambient_dim, vs)
    }
}

fn check_sub(space: &Subspace, sub: &Subspace) -> Result<()> {
    if space.ambient_dim != sub.ambient_dim || !space.contains(sub) {
        return Err(Error::NotASubspace);
    }
    Ok(())
}

pub fn quotient_dim(space: &Subspace, sub: &Subspace) -> Result<usize> {
    check_sub(space, sub)?;
    Ok(space.dim() - sub.dim())
}

/// Complement of `sub` in `space`: the basis vectors of `space` reduced
/// modulo `sub`, brought back to reduced echelon form.
pub fn quotient_representatives(space: &Subspace, sub: &Subspace) -> Result<Subspace> {
    check_sub(space, sub)?;
    let reduced = space.basis.iter().map(|v| sub.reduce(v)).collect();
    Ok(Subspace::from_spanning(space.ambient_dim, reduced))
}
