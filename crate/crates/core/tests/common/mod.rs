#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use depthkit::sym::{PermGroup, Permutation};
use depthkit::tower::{CentralizerElement, FrobeniusSystem, GroupAlgebraElement, Rational, TowerElement};
use num_traits::{One, Zero};
use depthkit::NonNegMatrix;
use rand::Rng;

pub fn s3_in_s4() -> NonNegMatrix {
    NonNegMatrix::from_rows(&[[1, 1, 0, 0, 0], [0, 1, 1, 1, 0], [0, 0, 0, 1, 1]]).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens
        .iter()
        .map(|g| Permutation::parse_cycles(g, degree).unwrap())
        .collect();
    PermGroup::generate(degree, gens).unwrap()
}

pub fn s2_in_s3() -> FrobeniusSystem {
    FrobeniusSystem::new(PermGroup::symmetric(3), &group(3, &["(1 2)"])).unwrap()
}

/// Patches zero rows and columns so the matrix is a valid inclusion matrix.
pub fn make_valid(rows: usize, cols: usize, mut entries: Vec<u64>) -> Vec<Vec<u64>> {
    for i in 0..rows {
        if (0..cols).all(|j| entries[i * cols + j] == 0) {
            entries[i * cols + i % cols] = 1;
        }
    }
    for j in 0..cols {
        if (0..rows).all(|i| entries[i * cols + j] == 0) {
            entries[(j % rows) * cols + j] = 1;
        }
    }
    entries.chunks(cols).map(<[u64]>::to_vec).collect()
}

pub fn connected(rows: &[Vec<u64>]) -> bool {
    let (r, c) = (rows.len(), rows[0].len());
    // vertices 0..r white, r..r+c black
    let mut seen = vec![false; r + c];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        let next: Vec<usize> = if v < r {
            (0..c).filter(|&j| rows[v][j] > 0).map(|j| r + j).collect()
        } else {
            (0..r).filter(|&i| rows[i][v - r] > 0).collect()
        };
        for w in next {
            if !std::mem::replace(&mut seen[w], true) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A random valid inclusion matrix with at most `max_rows × max_cols`
/// entries, optionally with a connected graph.
pub fn random_matrix(rng: &mut impl Rng, max_rows: usize, max_cols: usize, need_connected: bool) -> Vec<Vec<u64>> {
    loop {
        let rows = rng.gen_range(1..=max_rows);
        let cols = rng.gen_range(1..=max_cols);
        let density = rng.gen_range(0.15..0.7);
        let entries = (0..rows * cols)
            .map(|_| if rng.gen_bool(density) { rng.gen_range(1..=3) } else { 0 })
            .collect();
        let m = make_valid(rows, cols, entries);
        if !need_connected || connected(&m) {
            return m;
        }
    }
}

/// Depths by direct boolean bracketed powers, written independently of the
/// library: `(min, odd, even)`.
pub fn naive_depths(rows: &[Vec<u64>]) -> (usize, usize, usize) {
    type B = Vec<Vec<bool>>;
    fn mul(a: &B, b: &B) -> B {
        let inner = b.len();
        a.iter()
            .map(|row| {
                (0..b[0].len())
                    .map(|j| (0..inner).any(|k| row[k] && b[k][j]))
                    .collect()
            })
            .collect()
    }
    fn subset(a: &B, b: &B) -> bool {
        a.iter().zip(b).all(|(x, y)| x.iter().zip(y).all(|(&p, &q)| !p || q))
    }
    let m: B = rows.iter().map(|r| r.iter().map(|&x| x > 0).collect()).collect();
    let mt: B = (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
    let mmt = mul(&m, &mt);
    let n = m.len();
    let identity: B = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    // powers[k] = M^[k]
    let mut powers = vec![identity.clone(), m.clone()];
    let mut even = identity;
    for k in 2..60 {
        if k % 2 == 0 {
            even = mul(&even, &mmt);
            powers.push(even.clone());
        } else {
            powers.push(mul(&even, &m));
        }
    }
    let holds = |d: usize| subset(&powers[d + 1], &powers[d - 1]);
    let odd = (1..58).step_by(2).find(|&d| holds(d)).unwrap();
    let ev = (2..58).step_by(2).find(|&d| holds(d)).unwrap();
    (odd.min(ev), odd, ev)
}

/// An endomorphism of `R_S` as the matrix `s_ij ∈ Q[H]` with
/// `f(g_j) = Σ_i g_i s_ij`; entries keyed by group element index.
pub type EndMatrix = Vec<Vec<BTreeMap<usize, Rational>>>;

pub fn compose(g: &PermGroup, a: &EndMatrix, b: &EndMatrix) -> EndMatrix {
    let m = a.len();
    let mut out = vec![vec![BTreeMap::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for (&x, cx) in &a[i][k] {
                    for (&y, cy) in &b[k][j] {
                        let e: &mut Rational = out[i][j].entry(g.mul(x, y)).or_insert_with(Rational::zero);
                        *e += cx * cy;
                    }
                }
            }
            out[i][j].retain(|_, c| !c.is_zero());
        }
    }
    out
}

/// `f ↦ Σ_j f(x_j) ⊗ y_j`.
pub fn to_tower(sys: &FrobeniusSystem, f: &EndMatrix) -> TowerElement {
    let g = sys.group();
    let reps = sys.transversal();
    let mut out = TowerElement::zero(2);
    for (j, &gj) in reps.iter().enumerate() {
        let image = GroupAlgebraElement::from_terms(
            (0..reps.len()).flat_map(|i| f[i][j].iter().map(move |(&h, c)| (g.mul(reps[i], h), c.clone()))),
        );
        let y = GroupAlgebraElement::basis(g.inv(gj));
        out = out.add(&sys.normalize(&[image, y]));
    }
    out
}

pub fn end_basis(sys: &FrobeniusSystem) -> Vec<EndMatrix> {
    let m = sys.index();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for &h in sys.subgroup() {
                let mut f = vec![vec![BTreeMap::new(); m]; m];
                f[i][j].insert(h, Rational::one());
                out.push(f);
            }
        }
    }
    out
}

pub fn rank(vectors: &[TowerElement]) -> usize {
    let keys: Vec<Vec<u32>> = {
        let mut k: Vec<Vec<u32>> = vectors.iter().flat_map(|v| v.terms().map(|(k, _)| k.to_vec())).collect();
        k.sort();
        k.dedup();
        k
    };
    let mut rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| keys.iter().map(|k| v.coeff(k)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..keys.len() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot[col];
                for c in 0..keys.len() {
                    let delta = &f * &pivot[c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}


/// Checks that the change of coordinates is unital, multiplicative and
/// commutes with inclusion on levels 1 to 3.
pub fn check_isomorphism(sys: &FrobeniusSystem, d: &CentralizerElement) {
    let twisted = sys.twisted(d);
    for level in 1..=3 {
        let basis = sys.basis(level);
        assert_eq!(sys.change_coordinates(&sys.unit(level), d), twisted.unit(level), "unit at level {level}");
        for a in &basis {
            let fa = sys.change_coordinates(a, d);
            assert_eq!(
                sys.change_coordinates(&sys.include(a), d),
                twisted.include(&fa),
                "inclusion at level {level}"
            );
            if level == 1 {
                continue;
            }
            for b in &basis {
                let fb = sys.change_coordinates(b, d);
                assert_eq!(
                    sys.change_coordinates(&sys.multiply(a, b).unwrap(), d),
                    twisted.multiply(&fa, &fb).unwrap(),
                    "product at level {level}"
                );
            }
        }
    }
}
