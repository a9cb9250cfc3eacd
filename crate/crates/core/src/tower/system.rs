use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use super::algebra::{GroupAlgebraElement, Rational};
use super::element::TowerElement;
use super::linalg;
use crate::sym::{GroupError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },
    #[error("level {level} is below the minimum {min}")]
    LevelTooLow { level: usize, min: usize },
    #[error("acting level {acting} must be below the module level {module}")]
    ActionLevels { acting: usize, module: usize },
    #[error("element does not commute with the subgroup")]
    NotCentral,
    #[error("element is not invertible in the group algebra")]
    NotInvertible,
}

/// Frobenius coordinate system `(E; x_1..x_m; y_1..y_m)` for `Q[H] ⊆ Q[G]`.
///
/// `E(r) = π(t·r)` where `π` keeps the coefficients on `H` and `t` is a
/// twist (`1` for the standard system). The standard dual bases are
/// `x_i = g_i`, `y_i = g_i⁻¹` over the transversal.
#[derive(Debug, Clone)]
pub struct FrobeniusSystem {
    group: Arc<PermGroup>,
    subgroup: Vec<usize>,
    in_subgroup: Vec<bool>,
    reps: Vec<usize>,
    /// `g = reps[decomposition[g].0] · decomposition[g].1`
    decomposition: Vec<(u32, u32)>,
    twist: Option<GroupAlgebraElement>,
    x: Vec<GroupAlgebraElement>,
    y: Vec<GroupAlgebraElement>,
}

impl FrobeniusSystem {
    /// Standard system for `H ≤ G`, with the transversal made of the least
    /// element (in `G`'s element order) of each left coset.
    pub fn new(g: PermGroup, h: &PermGroup) -> Result<Self, TowerError> {
        let mut subgroup = g.embed(h)?;
        subgroup.sort_unstable();
        let n = g.order();
        let mut in_subgroup = vec![false; n];
        for &k in &subgroup {
            in_subgroup[k] = true;
        }
        let mut coset_rep = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if coset_rep[a] != usize::MAX {
                continue;
            }
            let pos = reps.len();
            reps.push(a);
            for &k in &subgroup {
                coset_rep[g.mul(a, k)] = pos;
            }
        }
        let decomposition = (0..n)
            .map(|a| {
                let pos = coset_rep[a];
                let h = g.mul(g.inv(reps[pos]), a);
                (pos as u32, h as u32)
            })
            .collect();
        let x = reps.iter().map(|&r| GroupAlgebraElement::basis(r)).collect();
        let y = reps
            .iter()
            .map(|&r| GroupAlgebraElement::basis(g.inv(r)))
            .collect();
        Ok(FrobeniusSystem {
            group: Arc::new(g),
            subgroup,
            in_subgroup,
            reps,
            decomposition,
            twist: None,
            x,
            y,
        })
    }

    /// The system `F = E(d·)` with dual bases `x_i`, `d⁻¹y_i`.
    pub fn twisted(&self, d: &CentralizerElement) -> FrobeniusSystem {
        let group = &*self.group;
        let twist = match &self.twist {
            Some(t) => t.mul(&d.element, group),
            None => d.element.clone(),
        };
        let y = self
            .y
            .iter()
            .map(|y| d.inverse.mul(y, group))
            .collect();
        FrobeniusSystem {
            twist: Some(twist),
            y,
            ..self.clone()
        }
    }

    /// Replaces the dual bases without any validation.
    pub fn with_dual_bases(
        &self,
        x: Vec<GroupAlgebraElement>,
        y: Vec<GroupAlgebraElement>,
    ) -> FrobeniusSystem {
        FrobeniusSystem {
            x,
            y,
            ..self.clone()
        }
    }

    /// A deliberately broken system (`y_1` doubled), used as a negative
    /// control for the verifier.
    pub fn corrupted(&self) -> FrobeniusSystem {
        let mut y = self.y.clone();
        y[0] = y[0].scale(&Rational::from_integer(2.into()));
        self.with_dual_bases(self.x.clone(), y)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    pub fn in_subgroup(&self, g: usize) -> bool {
        self.in_subgroup[g]
    }

    /// Index `[G:H]`.
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn transversal(&self) -> &[usize] {
        &self.reps
    }

    pub fn dual_x(&self) -> &[GroupAlgebraElement] {
        &self.x
    }

    pub fn dual_y(&self) -> &[GroupAlgebraElement] {
        &self.y
    }

    pub(crate) fn decompose(&self, g: usize) -> (usize, usize) {
        let (i, h) = self.decomposition[g];
        (i as usize, h as usize)
    }

    /// The Frobenius homomorphism `E: R → S`.
    pub fn expectation(&self, r: &GroupAlgebraElement) -> GroupAlgebraElement {
        let project = |r: &GroupAlgebraElement| {
            GroupAlgebraElement::from_terms(
                r.terms()
                    .filter(|&(g, _)| self.in_subgroup[g])
                    .map(|(g, c)| (g, c.clone())),
            )
        };
        match &self.twist {
            None => project(r),
            Some(t) => project(&t.mul(r, &self.group)),
        }
    }

    /// `E(g)` for a single group element.
    pub(crate) fn expectation_of(&self, g: usize) -> GroupAlgebraElement {
        match &self.twist {
            None if self.in_subgroup[g] => GroupAlgebraElement::basis(g),
            None => GroupAlgebraElement::zero(),
            Some(_) => self.expectation(&GroupAlgebraElement::basis(g)),
        }
    }

    pub fn mul(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> GroupAlgebraElement {
        a.mul(b, &self.group)
    }

    /// Searches for pairs `(a_j, c_j)` with `Σ_j E(a_j c_j) = 1_S`, which is
    /// equivalent to `R_S` being a generator.
    pub fn generator_criterion(&self) -> GeneratorCriterion {
        let one = GroupAlgebraElement::one();
        if self.expectation(&one) == one {
            return GeneratorCriterion {
                holds: true,
                witnesses: vec![(one.clone(), one)],
            };
        }
        for g in 0..self.group.order() {
            let a = GroupAlgebraElement::basis(g);
            for c in 0..self.group.order() {
                let c = GroupAlgebraElement::basis(c);
                if self.expectation(&self.mul(&a, &c)) == one {
                    return GeneratorCriterion {
                        holds: true,
                        witnesses: vec![(a, c)],
                    };
                }
            }
        }
        // rational combination Σ_g λ_g E(g) = 1, witnessed by pairs (λ_g g, 1)
        let order = self.group.order();
        let columns: Vec<GroupAlgebraElement> = (0..order).map(|g| self.expectation_of(g)).collect();
        let matrix = self
            .subgroup
            .iter()
            .map(|&h| columns.iter().map(|col| col.coeff(h)).collect())
            .collect();
        let rhs = self
            .subgroup
            .iter()
            .map(|&h| if h == 0 { Rational::one() } else { Rational::zero() })
            .collect();
        match linalg::solve(matrix, rhs) {
            Some(lambda) => GeneratorCriterion {
                holds: true,
                witnesses: lambda
                    .into_iter()
                    .enumerate()
                    .filter(|(_, l)| !l.is_zero())
                    .map(|(g, l)| (GroupAlgebraElement::from_terms([(g, l)]), one.clone()))
                    .collect(),
            },
            None => GeneratorCriterion {
                holds: false,
                witnesses: Vec::new(),
            },
        }
    }

    pub fn describe_group_element(&self, g: usize) -> String {
        self.group.element(g).to_string()
    }

    pub fn describe_algebra_element(&self, r: &GroupAlgebraElement) -> String {
        if r.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = r
            .terms()
            .map(|(g, c)| format!("{}*{}", c, self.describe_group_element(g)))
            .collect();
        parts.join(" + ")
    }

    /// Human-readable form of a tower element, e.g. `1*[(1 2) ⊗ ()]`.
    pub fn describe(&self, a: &TowerElement) -> String {
        if a.is_zero() {
            return format!("0 (level {})", a.level());
        }
        let mut out = String::new();
        for (n, (key, c)) in a.terms().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{c}*[");
            let last = key.len() - 1;
            for (k, &slot) in key.iter().enumerate() {
                if k > 0 {
                    out.push_str(" ⊗ ");
                }
                let g = if k < last { self.reps[slot as usize] } else { slot as usize };
                out.push_str(&self.describe_group_element(g));
            }
            out.push(']');
        }
        out
    }
}

/// Result of [`FrobeniusSystem::generator_criterion`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCriterion {
    pub holds: bool,
    pub witnesses: Vec<(GroupAlgebraElement, GroupAlgebraElement)>,
}

/// An invertible element of the centralizer `R^S`, with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerElement {
    element: GroupAlgebraElement,
    inverse: GroupAlgebraElement,
}

impl CentralizerElement {
    pub fn new(sys: &FrobeniusSystem, d: GroupAlgebraElement) -> Result<Self, TowerError> {
        let group = sys.group();
        for &h in sys.subgroup() {
            let hd = d.left_mul_element(h, group);
            let dh = d.right_mul_element(h, group);
            if hd != dh {
                return Err(TowerError::NotCentral);
            }
        }
        let inverse = d.inverse(group).ok_or(TowerError::NotInvertible)?;
        Ok(CentralizerElement {
            element: d,
            inverse,
        })
    }

    pub fn element(&self) -> &GroupAlgebraElement {
        &self.element
    }

    pub fn inverse(&self) -> &GroupAlgebraElement {
        &self.inverse
    }
}
