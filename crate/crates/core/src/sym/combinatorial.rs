//! Brute-force combinatorial depth `d_c(H, G)`.
//!
//! `d_c ≤ 2n` iff for all `x_1..x_n ∈ G` there are `y_1..y_{n-1} ∈ G` with
//! `H ∩ x_1Hx_1⁻¹ ∩ ⋯ ∩ x_nHx_n⁻¹ = H ∩ y_1Hy_1⁻¹ ∩ ⋯ ∩ y_{n-1}Hy_{n-1}⁻¹`.
//! For `n > 1`, `d_c ≤ 2n-1` iff additionally `y_1` can be chosen so that
//! `x_1hx_1⁻¹ = y_1hy_1⁻¹` for every `h` in that intersection.
//!
//! The even test only sees the set of conjugates `{x_iHx_i⁻¹}`, so it runs
//! over intersections of subsets of conjugates. The odd test keeps `x_1` and
//! `y_1` as elements and only collapses the remaining slots.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::group::{normalizer, GroupError, PermGroup};

/// Default bound on `|G|` for the brute-force search.
pub const DEFAULT_GROUP_LIMIT: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DepthBound {
    /// Least depth for which the condition was verified.
    Exact(usize),
    /// No depth up to the cap holds; the value is `cap + 1`.
    AtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialDepth {
    pub depth: DepthBound,
    pub normal: bool,
    /// `H = G`: reported as depth 1 by convention, no search performed on it.
    pub improper: bool,
}

/// Subsets of `G`, as bitsets over element indices.
type ElemSet = Vec<u64>;

fn empty_set(n: usize) -> ElemSet {
    vec![0; n.div_ceil(64)]
}

fn insert(s: &mut ElemSet, i: usize) {
    s[i / 64] |= 1 << (i % 64);
}

fn has(s: &ElemSet, i: usize) -> bool {
    s[i / 64] & (1 << (i % 64)) != 0
}

fn intersect(a: &ElemSet, b: &ElemSet) -> ElemSet {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn members(s: &ElemSet, n: usize) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |&i| has(s, i))
}

struct Search<'a> {
    g: &'a PermGroup,
    h: ElemSet,
    /// Distinct conjugates of `H`.
    conjugates: Vec<ElemSet>,
    /// For each element `x` of `G`, the index of `xHx⁻¹` in `conjugates`.
    conj_of: Vec<usize>,
    reach_cache: HashMap<(ElemSet, usize), BTreeSet<ElemSet>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a PermGroup, h_idx: &[usize]) -> Self {
        let n = g.order();
        let mut h = empty_set(n);
        for &i in h_idx {
            insert(&mut h, i);
        }
        let mut conjugates: Vec<ElemSet> = Vec::new();
        let mut conj_of = Vec::with_capacity(n);
        for x in 0..n {
            let xi = g.inv(x);
            let mut c = empty_set(n);
            for &k in h_idx {
                insert(&mut c, g.mul(g.mul(x, k), xi));
            }
            let pos = match conjugates.iter().position(|d| *d == c) {
                Some(p) => p,
                None => {
                    conjugates.push(c);
                    conjugates.len() - 1
                }
            };
            conj_of.push(pos);
        }
        Search {
            g,
            h,
            conjugates,
            conj_of,
            reach_cache: HashMap::new(),
        }
    }

    /// All `start ∩ K_1 ∩ ⋯ ∩ K_j` with `j ≤ k` conjugates `K_i`.
    fn reach(&mut self, start: &ElemSet, k: usize) -> BTreeSet<ElemSet> {
        if let Some(r) = self.reach_cache.get(&(start.clone(), k)) {
            return r.clone();
        }
        let mut all = BTreeSet::from([start.clone()]);
        let mut frontier = all.clone();
        for _ in 0..k {
            let mut next = BTreeSet::new();
            for x in &frontier {
                for c in &self.conjugates {
                    let y = intersect(x, c);
                    if !all.contains(&y) {
                        next.insert(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        self.reach_cache.insert((start.clone(), k), all.clone());
        all
    }

    fn h_cap_conj(&self, x: usize) -> ElemSet {
        intersect(&self.h, &self.conjugates[self.conj_of[x]])
    }

    /// `d_c ≤ 2n`.
    fn even_holds(&mut self, n: usize) -> bool {
        let h = self.h.clone();
        let with_n = self.reach(&h, n);
        let with_fewer = self.reach(&h, n - 1);
        with_n.is_subset(&with_fewer)
    }

    /// `d_c ≤ 2n - 1`, `n ≥ 2`.
    fn odd_holds(&mut self, n: usize) -> bool {
        let g = self.g;
        let order = g.order();
        let starts: Vec<ElemSet> = (0..order).map(|y| self.h_cap_conj(y)).collect();
        let reach_y: Vec<BTreeSet<ElemSet>> = (0..order)
            .map(|y| self.reach(&starts[y], n - 2))
            .collect();
        for x1 in 0..order {
            let targets = self.reach(&starts[x1], n - 1);
            let x1_inv = g.inv(x1);
            for target in &targets {
                let found = (0..order).any(|y1| {
                    if !reach_y[y1].contains(target) {
                        return false;
                    }
                    // x1 h x1⁻¹ = y1 h y1⁻¹ on the target, i.e. y1⁻¹x1 centralizes it
                    let c = g.mul(g.inv(y1), x1);
                    let c_inv = g.mul(x1_inv, y1);
                    members(target, order).all(|h| g.mul(g.mul(c, h), c_inv) == h)
                });
                if !found {
                    return false;
                }
            }
        }
        true
    }
}

/// Least combinatorial depth `≤ cap`, found by exhaustive search.
pub fn combinatorial_depth(
    g: &PermGroup,
    h: &PermGroup,
    cap: usize,
    max_group_order: usize,
) -> Result<CombinatorialDepth, GroupError> {
    if cap < 2 {
        return Err(GroupError::CapTooSmall(cap));
    }
    let h_idx = g.embed(h)?;
    if g.order() > max_group_order {
        return Err(GroupError::TooLarge {
            order: g.order(),
            limit: max_group_order,
        });
    }
    let mut search = Search::new(g, &h_idx);
    let normal = search.conjugates.len() == 1;
    if h.order() == g.order() {
        return Ok(CombinatorialDepth {
            depth: DepthBound::Exact(1),
            normal: true,
            improper: true,
        });
    }
    for d in 2..=cap {
        let holds = if d % 2 == 0 {
            search.even_holds(d / 2)
        } else {
            search.odd_holds(d.div_ceil(2))
        };
        if holds {
            return Ok(CombinatorialDepth {
                depth: DepthBound::Exact(d),
                normal,
                improper: false,
            });
        }
    }
    Ok(CombinatorialDepth {
        depth: DepthBound::AtLeast(cap + 1),
        normal,
        improper: false,
    })
}

/// `2 [G : N_G(H)]`.
pub fn normalizer_bound(g: &PermGroup, h: &PermGroup) -> Result<usize, GroupError> {
    let n = normalizer(g, h)?;
    Ok(2 * (g.order() / n.order()))
}
