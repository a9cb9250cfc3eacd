use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

use super::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {generator} has degree {found}, expected {expected}")]
    DegreeMismatch {
        generator: String,
        expected: usize,
        found: usize,
    },
    #[error("H is not a subgroup of G: {0} is not in G")]
    NotSubgroup(String),
    #[error("group has at least {order} elements, above the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("search cap must be at least 2 (got {0})")]
    CapTooSmall(usize),
}

/// A finite permutation group with its elements enumerated in increasing
/// image order, so the identity has index 0.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: OnceLock<Vec<u32>>,
    inverses: OnceLock<Vec<u32>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup::from_closed_set(self.degree, self.generators.clone(), self.elements.clone())
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closure of the generators under composition.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    generator: g.to_string(),
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let elements = seen.into_keys().collect();
        Ok(PermGroup::from_closed_set(degree, generators, elements))
    }

    /// Like [`generate`](Self::generate) but stops once more than `limit`
    /// elements have been found.
    pub fn generate_bounded(
        degree: usize,
        generators: Vec<Permutation>,
        limit: usize,
    ) -> Result<Self, GroupError> {
        let order = super::group::bounded_order(degree, &generators, limit);
        if order > limit {
            return Err(GroupError::TooLarge { order, limit });
        }
        PermGroup::generate(degree, generators)
    }

    fn from_closed_set(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
            table: OnceLock::new(),
            inverses: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_closed_set(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::parse_cycles("(1 2)", n).expect("valid"));
            let long: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            gens.push(Permutation::parse_cycles(&format!("({})", long.join(" ")), n).expect("valid"));
        }
        PermGroup::generate(n, gens).expect("degrees agree")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (3..=n)
            .map(|k| Permutation::parse_cycles(&format!("(1 2 {k})"), n).expect("valid"))
            .collect();
        PermGroup::generate(n, gens).expect("degrees agree")
    }

    /// Subgroup of `self` with the given elements, which must be closed.
    pub fn subgroup_from_indices(&self, indices: &[usize]) -> PermGroup {
        let elements: Vec<Permutation> = indices.iter().map(|&i| self.elements[i].clone()).collect();
        // greedy generating set: keep an element only if it is not yet generated
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span = PermGroup::trivial(self.degree);
        for e in &elements {
            if !span.contains(e) {
                gens.push(e.clone());
                span = PermGroup::generate(self.degree, gens.clone()).expect("same degree");
            }
        }
        PermGroup::from_closed_set(self.degree, gens, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    fn table(&self) -> &[u32] {
        self.table.get_or_init(|| {
            let n = self.order();
            let mut t = Vec::with_capacity(n * n);
            for a in &self.elements {
                for b in &self.elements {
                    t.push(self.index[&a.compose(b)] as u32);
                }
            }
            t
        })
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table()[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        let inv = self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|p| self.index[&p.inverse()] as u32)
                .collect()
        });
        inv[a] as usize
    }

    /// Positions of the elements of `sub` inside `self`.
    pub fn embed(&self, sub: &PermGroup) -> Result<Vec<usize>, GroupError> {
        if sub.degree != self.degree {
            return Err(GroupError::DegreeMismatch {
                generator: "H".into(),
                expected: self.degree,
                found: sub.degree,
            });
        }
        sub.elements
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| GroupError::NotSubgroup(p.to_string()))
            })
            .collect()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        g.embed(self).is_ok()
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> Result<bool, GroupError> {
        Ok(normalizer(g, self)?.order() == g.order())
    }
}

pub(crate) fn bounded_order(degree: usize, generators: &[Permutation], limit: usize) -> usize {
    let id = Permutation::identity(degree);
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            if g.degree() != degree {
                continue;
            }
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return seen.len();
                }
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// `N_G(H) = { g ∈ G : gHg⁻¹ = H }`.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, GroupError> {
    let h_idx = g.embed(h)?;
    let mut in_h = vec![false; g.order()];
    for &i in &h_idx {
        in_h[i] = true;
    }
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| {
            let xi = g.inv(x);
            h_idx.iter().all(|&k| in_h[g.mul(g.mul(x, k), xi)])
        })
        .collect();
    Ok(g.subgroup_from_indices(&members))
}
