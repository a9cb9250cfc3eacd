//! The rational group algebra `Q[G]`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg;
use crate::sym::PermGroup;

pub type Rational = BigRational;

/// Finite rational combination of group elements, keyed by element index
/// in the ambient group. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<usize, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement::default()
    }

    pub fn one() -> Self {
        GroupAlgebraElement::basis(0)
    }

    /// The group element with index `g`.
    pub fn basis(g: usize) -> Self {
        GroupAlgebraElement::from_terms([(g, Rational::one())])
    }

    pub fn scalar(c: Rational) -> Self {
        GroupAlgebraElement::from_terms([(0, c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut out = GroupAlgebraElement::zero();
        for (g, c) in terms {
            out.add_term(g, c);
        }
        out
    }

    pub fn add_term(&mut self, g: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(g).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn coeff(&self, g: usize) -> Rational {
        self.coeffs.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The single group element carrying coefficient one, if that is all there is.
    pub fn as_group_element(&self) -> Option<usize> {
        match self.coeffs.iter().next() {
            Some((&g, c)) if self.coeffs.len() == 1 && c.is_one() => Some(g),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GroupAlgebraElement::zero();
        }
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|(&g, x)| (g, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, group: &PermGroup) -> Self {
        let mut out = GroupAlgebraElement::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(group.mul(a, b), x * y);
            }
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul_element(&self, g: usize, group: &PermGroup) -> Self {
        GroupAlgebraElement {
            coeffs: self.terms().map(|(b, y)| (group.mul(g, b), y.clone())).collect(),
        }
    }

    pub fn right_mul_element(&self, g: usize, group: &PermGroup) -> Self {
        GroupAlgebraElement {
            coeffs: self.terms().map(|(b, y)| (group.mul(b, g), y.clone())).collect(),
        }
    }

    /// Two-sided inverse, found by solving `self · X = 1` exactly.
    pub fn inverse(&self, group: &PermGroup) -> Option<Self> {
        let n = group.order();
        // column b of the left-multiplication matrix is self · g_b
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for b in 0..n {
            for (a, x) in self.terms() {
                matrix[group.mul(a, b)][b] += x;
            }
        }
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        let sol = linalg::solve(matrix, rhs)?;
        let inv = GroupAlgebraElement::from_terms(sol.into_iter().enumerate());
        let one = GroupAlgebraElement::one();
        (inv.mul(self, group) == one && self.mul(&inv, group) == one).then_some(inv)
    }
}
