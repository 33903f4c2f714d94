use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::Tree;
use crate::algebra::Rational;

/// Finite linear combination of monomials of one arity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    pub arity: usize,
    pub terms: BTreeMap<Tree, Rational>,
}

impl Element {
    pub fn zero(arity: usize) -> Self {
        Element { arity, terms: BTreeMap::new() }
    }

    pub fn monomial(t: Tree) -> Self {
        let mut e = Self::zero(t.arity());
        e.add_term(t, Rational::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: Tree, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = self.terms.remove(&t).unwrap_or_else(Rational::zero) + c;
        if !sum.is_zero() {
            self.terms.insert(t, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Rational) {
        for (t, x) in &other.terms {
            self.add_term(t.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Element {
        let mut e = Element::zero(self.arity);
        e.add_scaled(self, c);
        e
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tree, &Rational)> {
        self.terms.iter()
    }
}

/// Renders as a signed sum, e.g. `x(x(1,2),3) - x(1,x(2,3))`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}
