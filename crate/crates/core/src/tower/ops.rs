//! Ring, module and Frobenius structure on the tower.
//!
//! Levels count tensor factors: `R_1 = R`, `R_2 = R ⊗_S R`, and level 0 is
//! the subring `S`. With `E` the Frobenius map of the base extension:
//!
//! * on `R_{2n}`: `(r_1⊗⋯⊗r_{2n})(t_1⊗⋯⊗t_{2n}) =
//!   r_1⊗⋯⊗r_n E(r_{n+1}E(⋯E(r_{2n}t_1)t_2⋯)t_n)⊗t_{n+1}⊗⋯⊗t_{2n}`
//! * on `R_{2n+1}`: the same nesting over `n` factors, with the middle
//!   factor `r_{n+1}E(⋯)t_{n+1}`.
//!
//! `E_m: R_{m+1} → R_m` applies `E` to factor `n+1` (for `m = 2n`) or
//! multiplies factors `n+1` and `n+2` together (for `m = 2n+1`).

use num_traits::One;

use super::algebra::{GroupAlgebraElement, Rational};
use super::element::TowerElement;
use super::system::{CentralizerElement, FrobeniusSystem, TowerError};

/// Which side a lower tower ring acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// All tuples in `{0..m}^len`, in lexicographic order.
pub(crate) fn index_tuples(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

impl FrobeniusSystem {
    /// Group elements of a basis tensor: transversal elements for all but the
    /// last slot.
    pub(crate) fn key_elements(&self, level: usize, key: &[u32]) -> Vec<usize> {
        if level == 0 {
            return vec![key[0] as usize];
        }
        let last = key.len() - 1;
        key.iter()
            .enumerate()
            .map(|(k, &s)| {
                if k < last {
                    self.transversal()[s as usize]
                } else {
                    s as usize
                }
            })
            .collect()
    }

    /// Brings a formal tensor `a_1 ⊗ ⋯ ⊗ a_n` of group-algebra elements into
    /// normal form by expanding and sliding subgroup parts to the right.
    pub fn normalize(&self, raw: &[GroupAlgebraElement]) -> TowerElement {
        assert!(!raw.is_empty(), "a tensor needs at least one factor");
        let mut out = TowerElement::zero(raw.len());
        let mut key = Vec::with_capacity(raw.len());
        self.normalize_into(raw, 0, Rational::one(), &mut key, &mut out);
        out
    }

    fn normalize_into(
        &self,
        raw: &[GroupAlgebraElement],
        carry: usize,
        coeff: Rational,
        key: &mut Vec<u32>,
        out: &mut TowerElement,
    ) {
        let slot = key.len();
        let group = self.group();
        let last = slot + 1 == raw.len();
        for (g, c) in raw[slot].terms() {
            let x = group.mul(carry, g);
            let c = &coeff * c;
            if last {
                key.push(x as u32);
                out.add_term(key.clone(), c);
                key.pop();
            } else {
                let (i, h) = self.decompose(x);
                key.push(i as u32);
                self.normalize_into(raw, h, c, key, out);
                key.pop();
            }
        }
    }

    /// Level-0 element from a combination supported on `H`.
    pub fn subring_element(&self, s: &GroupAlgebraElement) -> TowerElement {
        let mut out = TowerElement::zero(0);
        for (g, c) in s.terms() {
            assert!(self.in_subgroup(g), "element is not in the subring");
            out.add_term(vec![g as u32], c.clone());
        }
        out
    }

    /// Level-1 element of `R`.
    pub fn ring_element(&self, r: &GroupAlgebraElement) -> TowerElement {
        self.normalize(std::slice::from_ref(r))
    }

    /// The group-algebra element represented by a level-1 tower element.
    pub fn group_algebra_of(&self, a: &TowerElement) -> GroupAlgebraElement {
        assert_eq!(a.level(), 1, "only level 1 is the group algebra itself");
        GroupAlgebraElement::from_terms(a.terms().map(|(k, c)| (k[0] as usize, c.clone())))
    }

    /// Every normal-form basis tensor at a level.
    pub fn basis(&self, level: usize) -> Vec<TowerElement> {
        if level == 0 {
            return self
                .subgroup()
                .iter()
                .map(|&h| TowerElement::basis(0, vec![h as u32]))
                .collect();
        }
        let order = self.group().order();
        let mut out = Vec::new();
        for prefix in index_tuples(self.index(), level - 1) {
            for g in 0..order {
                let mut key: Vec<u32> = prefix.iter().map(|&i| i as u32).collect();
                key.push(g as u32);
                out.push(TowerElement::basis(level, key));
            }
        }
        out
    }

    pub fn basis_size(&self, level: usize) -> usize {
        if level == 0 {
            self.subgroup().len()
        } else {
            self.index().pow(level as u32 - 1) * self.group().order()
        }
    }

    fn tensor(&self, factors: Vec<GroupAlgebraElement>) -> TowerElement {
        self.normalize(&factors)
    }

    fn basis_element(&self, g: usize) -> GroupAlgebraElement {
        GroupAlgebraElement::basis(g)
    }

    /// Product of two basis tensors at the same level.
    fn multiply_basis(&self, level: usize, a: &[usize], b: &[usize]) -> TowerElement {
        let group = self.group();
        if level == 0 {
            return TowerElement::basis(0, vec![group.mul(a[0], b[0]) as u32]);
        }
        if level == 1 {
            return self.tensor(vec![self.basis_element(group.mul(a[0], b[0]))]);
        }
        let n = level / 2;
        // a and b are 0-based: r_k = a[k-1], t_k = b[k-1]
        let r = |k: usize| a[k - 1];
        let t = |k: usize| b[k - 1];
        let mut inner = self.expectation_of(group.mul(r(level), t(1)));
        // E(r_{level+1-k} · inner · t_k) for k = 2..=n
        for k in 2..=n {
            if inner.is_zero() {
                return TowerElement::zero(level);
            }
            let left = inner.left_mul_element(r(level + 1 - k), group);
            inner = self.expectation(&left.right_mul_element(t(k), group));
        }
        if inner.is_zero() {
            return TowerElement::zero(level);
        }
        let mut factors: Vec<GroupAlgebraElement> = Vec::with_capacity(level);
        if level.is_multiple_of(2) {
            for k in 1..n {
                factors.push(self.basis_element(r(k)));
            }
            factors.push(inner.left_mul_element(r(n), group));
            for k in n + 1..=level {
                factors.push(self.basis_element(t(k)));
            }
        } else {
            for k in 1..=n {
                factors.push(self.basis_element(r(k)));
            }
            factors.push(
                inner
                    .left_mul_element(r(n + 1), group)
                    .right_mul_element(t(n + 1), group),
            );
            for k in n + 2..=level {
                factors.push(self.basis_element(t(k)));
            }
        }
        self.tensor(factors)
    }

    /// `E`-multiplication on `R_n`; level 1 is the group algebra product and
    /// level 0 the product in `S`.
    pub fn multiply(&self, a: &TowerElement, b: &TowerElement) -> Result<TowerElement, TowerError> {
        if a.level() != b.level() {
            return Err(TowerError::LevelMismatch {
                left: a.level(),
                right: b.level(),
            });
        }
        let level = a.level();
        let mut out = TowerElement::zero(level);
        let b_terms: Vec<(Vec<usize>, &Rational)> = b
            .terms()
            .map(|(k, c)| (self.key_elements(level, k), c))
            .collect();
        for (ka, ca) in a.terms() {
            let ea = self.key_elements(level, ka);
            for (eb, cb) in &b_terms {
                let prod = self.multiply_basis(level, &ea, eb);
                out.add_scaled(&prod, &(ca * *cb));
            }
        }
        Ok(out)
    }

    /// Product of elements at possibly different levels, computed in the
    /// higher one.
    pub fn multiply_lifted(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        let level = a.level().max(b.level());
        let a = self.include_to(a, level);
        let b = self.include_to(b, level);
        self.multiply(&a, &b).expect("same level")
    }

    /// Identity of `R_n`: `Σ x_{i_1}⊗⋯⊗x_{i_k}⊗y_{i_k}⊗⋯⊗y_{i_1}` for
    /// `n = 2k`, with an extra middle `1` for `n = 2k+1`.
    pub fn unit(&self, level: usize) -> TowerElement {
        if level == 0 {
            return TowerElement::basis(0, vec![0]);
        }
        let k = level / 2;
        let mut out = TowerElement::zero(level);
        for idx in index_tuples(self.index(), k) {
            let mut factors: Vec<GroupAlgebraElement> = idx.iter().map(|&i| self.dual_x()[i].clone()).collect();
            if level % 2 == 1 {
                factors.push(GroupAlgebraElement::one());
            }
            factors.extend(idx.iter().rev().map(|&i| self.dual_y()[i].clone()));
            out.add_scaled(&self.tensor(factors), &Rational::one());
        }
        out
    }

    /// The inclusion `R_n → R_{n+1}`, `a ↦ a·1_{n+1}`.
    pub fn include(&self, a: &TowerElement) -> TowerElement {
        let level = a.level();
        let mut out = TowerElement::zero(level + 1);
        for (key, c) in a.terms() {
            let el = self.key_elements(level, key);
            let lifted = if level == 0 {
                self.tensor(vec![self.basis_element(el[0])])
            } else if level % 2 == 1 {
                // r_1⊗⋯⊗r_k x_i ⊗ y_i ⊗ r_{k+1}⊗⋯, level = 2k-1
                let k = level.div_ceil(2);
                let mut sum = TowerElement::zero(level + 1);
                for (x, y) in self.dual_x().iter().zip(self.dual_y()) {
                    let mut factors: Vec<GroupAlgebraElement> =
                        el[..k - 1].iter().map(|&g| self.basis_element(g)).collect();
                    factors.push(x.left_mul_element(el[k - 1], self.group()));
                    factors.push(y.clone());
                    factors.extend(el[k..].iter().map(|&g| self.basis_element(g)));
                    sum.add_scaled(&self.tensor(factors), &Rational::one());
                }
                sum
            } else {
                let k = level / 2;
                let mut factors: Vec<GroupAlgebraElement> =
                    el[..k].iter().map(|&g| self.basis_element(g)).collect();
                factors.push(GroupAlgebraElement::one());
                factors.extend(el[k..].iter().map(|&g| self.basis_element(g)));
                self.tensor(factors)
            };
            out.add_scaled(&lifted, c);
        }
        out
    }

    pub fn include_to(&self, a: &TowerElement, level: usize) -> TowerElement {
        assert!(level >= a.level(), "cannot include downwards");
        let mut cur = a.clone();
        while cur.level() < level {
            cur = self.include(&cur);
        }
        cur
    }

    /// `E_m: R_{m+1} → R_m` for any `m ≥ 0`; `E_0 = E` lands in `S`.
    pub fn frobenius_map(&self, a: &TowerElement) -> Result<TowerElement, TowerError> {
        let level = a.level();
        if level == 0 {
            return Err(TowerError::LevelTooLow { level, min: 1 });
        }
        let m = level - 1;
        let group = self.group();
        let mut out = TowerElement::zero(m);
        for (key, c) in a.terms() {
            let el = self.key_elements(level, key);
            let image = if m == 0 {
                self.subring_element(&self.expectation_of(el[0]))
            } else if m.is_multiple_of(2) {
                let n = m / 2;
                let mut factors: Vec<GroupAlgebraElement> =
                    el[..n - 1].iter().map(|&g| self.basis_element(g)).collect();
                factors.push(self.expectation_of(el[n]).left_mul_element(el[n - 1], group));
                factors.extend(el[n + 1..].iter().map(|&g| self.basis_element(g)));
                self.tensor(factors)
            } else {
                let n = (m - 1) / 2;
                let mut factors: Vec<GroupAlgebraElement> =
                    el[..n].iter().map(|&g| self.basis_element(g)).collect();
                factors.push(self.basis_element(group.mul(el[n], el[n + 1])));
                factors.extend(el[n + 2..].iter().map(|&g| self.basis_element(g)));
                self.tensor(factors)
            };
            out.add_scaled(&image, c);
        }
        Ok(out)
    }

    /// Conditional expectation `E_m: R_{m+1} → R_m` for elements of level at
    /// least 2.
    pub fn cond_exp(&self, a: &TowerElement) -> Result<TowerElement, TowerError> {
        if a.level() < 2 {
            return Err(TowerError::LevelTooLow {
                level: a.level(),
                min: 2,
            });
        }
        self.frobenius_map(a)
    }

    /// Temperley–Lieb generator `e_n ∈ R_{n+1}`, `n ≥ 1`.
    pub fn tl_generator(&self, n: usize) -> Result<TowerElement, TowerError> {
        if n == 0 {
            return Err(TowerError::LevelTooLow { level: 0, min: 1 });
        }
        let k = n / 2;
        let x = self.dual_x();
        let y = self.dual_y();
        let mut out = TowerElement::zero(n + 1);
        if n.is_multiple_of(2) {
            // Σ x_{i_1}⊗⋯⊗x_{i_k}⊗y_{i_k}x_{i_{k+1}}⊗y_{i_{k+1}}⊗y_{i_{k-1}}⊗⋯⊗y_{i_1}
            for idx in index_tuples(self.index(), k + 1) {
                let mut factors: Vec<GroupAlgebraElement> =
                    idx[..k].iter().map(|&i| x[i].clone()).collect();
                factors.push(self.mul(&y[idx[k - 1]], &x[idx[k]]));
                factors.push(y[idx[k]].clone());
                factors.extend(idx[..k - 1].iter().rev().map(|&i| y[i].clone()));
                out.add_scaled(&self.tensor(factors), &Rational::one());
            }
        } else {
            for idx in index_tuples(self.index(), k) {
                let mut factors: Vec<GroupAlgebraElement> =
                    idx.iter().map(|&i| x[i].clone()).collect();
                factors.push(GroupAlgebraElement::one());
                factors.push(GroupAlgebraElement::one());
                factors.extend(idx.iter().rev().map(|&i| y[i].clone()));
                out.add_scaled(&self.tensor(factors), &Rational::one());
            }
        }
        Ok(out)
    }

    /// Action of `x ∈ R_m` on `a ∈ R_n` (`m < n`) through the first (left)
    /// or last (right) `m` tensor factors.
    pub fn bimodule_action(
        &self,
        x: &TowerElement,
        a: &TowerElement,
        side: Side,
    ) -> Result<TowerElement, TowerError> {
        let (m, n) = (x.level(), a.level());
        if m >= n || m == 0 {
            return Err(TowerError::ActionLevels { acting: m, module: n });
        }
        let mut out = TowerElement::zero(n);
        for (key, c) in a.terms() {
            let el = self.key_elements(n, key);
            let (head, tail) = match side {
                Side::Left => el.split_at(m),
                Side::Right => el.split_at(n - m),
            };
            let part = match side {
                Side::Left => head,
                Side::Right => tail,
            };
            let part = self.tensor(part.iter().map(|&g| self.basis_element(g)).collect());
            let prod = match side {
                Side::Left => self.multiply(x, &part)?,
                Side::Right => self.multiply(&part, x)?,
            };
            for (pk, pc) in prod.terms() {
                let pel = self.key_elements(m, pk);
                let factors: Vec<GroupAlgebraElement> = match side {
                    Side::Left => pel.iter().chain(tail).map(|&g| self.basis_element(g)).collect(),
                    Side::Right => head.iter().chain(&pel).map(|&g| self.basis_element(g)).collect(),
                };
                out.add_scaled(&self.tensor(factors), &(c * pc));
            }
        }
        Ok(out)
    }

    /// The isomorphism from the `E`-tower to the tower of `F = E(d·)`:
    /// on `R_{2n}` factors `n+1..2n`, on `R_{2n+1}` factors `n+2..2n+1`
    /// are multiplied on the left by `d⁻¹`. The result lives in
    /// `self.twisted(d)`.
    pub fn change_coordinates(&self, a: &TowerElement, d: &CentralizerElement) -> TowerElement {
        let level = a.level();
        let first_twisted = level / 2 + level % 2;
        let mut out = TowerElement::zero(level);
        if level == 0 {
            return a.clone();
        }
        for (key, c) in a.terms() {
            let el = self.key_elements(level, key);
            let factors = el
                .iter()
                .enumerate()
                .map(|(k, &g)| {
                    if k >= first_twisted {
                        d.inverse().right_mul_element(g, self.group())
                    } else {
                        self.basis_element(g)
                    }
                })
                .collect();
            out.add_scaled(&self.tensor(factors), c);
        }
        out
    }

    /// `x_i^n = x_i ⊗ 1_{n-1}` and `y_i^n = 1_{n-1} ⊗ y_i` in `R_{n+1}`,
    /// dual bases for `E_n`.
    pub fn tower_dual_bases(&self, n: usize) -> (Vec<TowerElement>, Vec<TowerElement>) {
        let xs = self.dual_x().iter().map(|x| self.prefix_with(x, &self.unit(n))).collect();
        let ys = self.dual_y().iter().map(|y| self.suffix_with(&self.unit(n), y)).collect();
        (xs, ys)
    }

    /// `r ⊗ a` for `a ∈ R_n`, landing in `R_{n+1}` (`r` itself when `n = 0`).
    pub fn prefix_with(&self, r: &GroupAlgebraElement, a: &TowerElement) -> TowerElement {
        let level = a.level();
        let mut out = TowerElement::zero(level + 1);
        for (key, c) in a.terms() {
            let el = self.key_elements(level, key);
            let factors: Vec<GroupAlgebraElement> = if level == 0 {
                vec![r.right_mul_element(el[0], self.group())]
            } else {
                std::iter::once(r.clone())
                    .chain(el.iter().map(|&g| self.basis_element(g)))
                    .collect()
            };
            out.add_scaled(&self.tensor(factors), c);
        }
        out
    }

    /// `a ⊗ r` for `a ∈ R_n`, landing in `R_{n+1}` (`r` itself when `n = 0`).
    pub fn suffix_with(&self, a: &TowerElement, r: &GroupAlgebraElement) -> TowerElement {
        let level = a.level();
        let mut out = TowerElement::zero(level + 1);
        for (key, c) in a.terms() {
            let el = self.key_elements(level, key);
            let factors: Vec<GroupAlgebraElement> = if level == 0 {
                vec![r.left_mul_element(el[0], self.group())]
            } else {
                el.iter()
                    .map(|&g| self.basis_element(g))
                    .chain(std::iter::once(r.clone()))
                    .collect()
            };
            out.add_scaled(&self.tensor(factors), c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{Permutation, PermGroup};

    fn s2_in_s3() -> FrobeniusSystem {
        let g = PermGroup::symmetric(3);
        let h = PermGroup::generate(3, vec![Permutation::parse_cycles("(1 2)", 3).unwrap()]).unwrap();
        FrobeniusSystem::new(g, &h).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn el(sys: &FrobeniusSystem, gs: &[usize]) -> TowerElement {
        sys.normalize(&gs.iter().map(|&g| GroupAlgebraElement::basis(g)).collect::<Vec<_>>())
    }

    /// Normal form by repeatedly fixing the rightmost non-transversal slot.
    fn normal_form_right_first(sys: &FrobeniusSystem, gs: &[usize]) -> Vec<u32> {
        let group = sys.group();
        let mut gs = gs.to_vec();
        let last = gs.len() - 1;
        loop {
            let bad = (0..last).rev().find(|&k| {
                let (i, _) = sys.decompose(gs[k]);
                sys.transversal()[i] != gs[k]
            });
            let Some(k) = bad else { break };
            let (i, h) = sys.decompose(gs[k]);
            gs[k] = sys.transversal()[i];
            gs[k + 1] = group.mul(h, gs[k + 1]);
        }
        gs.iter()
            .enumerate()
            .map(|(k, &g)| if k < last { sys.decompose(g).0 as u32 } else { g as u32 })
            .collect()
    }

    #[test]
    fn normal_form_is_confluent() {
        let sys = s2_in_s3();
        let order = sys.group().order();
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    let n = el(&sys, &[a, b, c]);
                    assert_eq!(n.len(), 1);
                    let (key, coeff) = n.terms().next().unwrap();
                    assert_eq!(key, normal_form_right_first(&sys, &[a, b, c]).as_slice());
                    assert_eq!(*coeff, q(1));
                }
            }
        }
    }

    #[test]
    fn basis_sizes() {
        let sys = s2_in_s3();
        assert_eq!(sys.index(), 3);
        for l in 0..=4 {
            assert_eq!(sys.basis(l).len(), sys.basis_size(l));
        }
        assert_eq!(sys.basis_size(4), 162);
    }

    #[test]
    fn e1_multiplies_factors() {
        let sys = s2_in_s3();
        let order = sys.group().order();
        for a in 0..order {
            for b in 0..order {
                let t = el(&sys, &[a, b]);
                let ab = el(&sys, &[sys.group().mul(a, b)]);
                assert_eq!(sys.cond_exp(&t).unwrap(), ab);
            }
        }
        assert!(matches!(
            sys.cond_exp(&el(&sys, &[1])),
            Err(TowerError::LevelTooLow { level: 1, min: 2 })
        ));
    }

    #[test]
    fn e2_applies_expectation_in_the_middle() {
        let sys = s2_in_s3();
        let group = sys.group();
        let order = group.order();
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    let lhs = sys.cond_exp(&el(&sys, &[a, b, c])).unwrap();
                    let expected = if sys.in_subgroup(b) { el(&sys, &[group.mul(a, b), c]) } else { TowerElement::zero(2) };
                    assert_eq!(lhs, expected);
                }
            }
        }
    }

    #[test]
    fn small_units() {
        let sys = s2_in_s3();
        assert_eq!(sys.unit(1), el(&sys, &[0]));
        assert_eq!(sys.unit(2).len(), 3);
        let mut expected = TowerElement::zero(2);
        for &g in sys.transversal() {
            expected = expected.add(&el(&sys, &[g, sys.group().inv(g)]));
        }
        assert_eq!(sys.unit(2), expected);
        assert_eq!(sys.include(&sys.unit(1)), sys.unit(2));
        assert_eq!(sys.include(&sys.unit(2)), sys.unit(3));
        assert_eq!(sys.include(&sys.unit(3)), sys.unit(4));
    }

    #[test]
    fn expectations_of_units() {
        let sys = s2_in_s3();
        assert_eq!(sys.cond_exp(&sys.unit(2)).unwrap(), sys.unit(1).scale(&q(3)));
        assert_eq!(sys.cond_exp(&sys.unit(3)).unwrap(), sys.unit(2));
        assert_eq!(sys.cond_exp(&sys.unit(4)).unwrap(), sys.unit(3).scale(&q(3)));
    }

    #[test]
    fn tl_generators_closed_forms() {
        let sys = s2_in_s3();
        assert_eq!(sys.tl_generator(1).unwrap(), el(&sys, &[0, 0]));
        let mut e2 = TowerElement::zero(3);
        let group = sys.group();
        for &gi in sys.transversal() {
            for &gj in sys.transversal() {
                e2 = e2.add(&el(&sys, &[gi, group.mul(group.inv(gi), gj), group.inv(gj)]));
            }
        }
        assert_eq!(sys.tl_generator(2).unwrap(), e2);
        assert!(sys.tl_generator(0).is_err());
        for n in 1..=3 {
            let e = sys.tl_generator(n).unwrap();
            assert_eq!(sys.cond_exp(&e).unwrap(), sys.unit(n));
        }
    }

    #[test]
    fn include_two_to_three_inserts_one() {
        let sys = s2_in_s3();
        let order = sys.group().order();
        for a in 0..order {
            for b in 0..order {
                assert_eq!(sys.include(&el(&sys, &[a, b])), el(&sys, &[a, 0, b]));
            }
        }
    }

    #[test]
    fn left_action_of_r_multiplies_first_factor() {
        let sys = s2_in_s3();
        let group = sys.group();
        let a = el(&sys, &[3, 4, 5]);
        for r in 0..group.order() {
            let x = el(&sys, &[r]);
            assert_eq!(
                sys.bimodule_action(&x, &a, Side::Left).unwrap(),
                el(&sys, &[group.mul(r, 3), 4, 5])
            );
            assert_eq!(
                sys.bimodule_action(&x, &a, Side::Right).unwrap(),
                el(&sys, &[3, 4, group.mul(5, r)])
            );
        }
        assert_eq!(sys.bimodule_action(&sys.unit(2), &a, Side::Left).unwrap(), a);
        assert!(matches!(
            sys.bimodule_action(&a, &a, Side::Left),
            Err(TowerError::ActionLevels { acting: 3, module: 3 })
        ));
    }

    #[test]
    fn trivial_extension_has_unit_generators() {
        let g = PermGroup::symmetric(3);
        let sys = FrobeniusSystem::new(g.clone(), &g).unwrap();
        assert_eq!(sys.index(), 1);
        for n in 1..=3 {
            assert_eq!(sys.tl_generator(n).unwrap(), sys.unit(n + 1));
        }
    }

    #[test]
    fn level_mismatch_is_an_error() {
        let sys = s2_in_s3();
        assert!(matches!(
            sys.multiply(&sys.unit(1), &sys.unit(2)),
            Err(TowerError::LevelMismatch { left: 1, right: 2 })
        ));
    }
}
