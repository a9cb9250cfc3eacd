use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::algebra::Rational;

/// An element of `R_n`, as rational coefficients on normal-form basis
/// tensors.
///
/// A key at level `n ≥ 1` is `[i_1, …, i_{n-1}, g]`: transversal positions
/// followed by the index of a group element. At level 0 (the subring `S`)
/// the key is `[h]` with `h ∈ H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TowerElement {
    level: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TowerElement {
    pub fn zero(level: usize) -> Self {
        TowerElement {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn basis(level: usize, key: Vec<u32>) -> Self {
        debug_assert_eq!(key.len(), level.max(1));
        let mut out = TowerElement::zero(level);
        out.terms.insert(key, Rational::one());
        out
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &[u32]) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, key: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &TowerElement, c: &Rational) {
        assert_eq!(self.level, other.level, "level mismatch in sum");
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn add(&self, other: &TowerElement) -> TowerElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &TowerElement) -> TowerElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> TowerElement {
        let mut out = TowerElement::zero(self.level);
        out.add_scaled(self, c);
        out
    }
}
