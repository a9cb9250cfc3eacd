//! Minimum depth of an inclusion matrix.
//!
//! `M` has depth `n ≥ 1` when `M^[n+1] ≤ q M^[n-1]` for some positive
//! integer `q`, i.e. when `supp M^[n+1] ⊆ supp M^[n-1]`. Rows index the
//! simples of the subring `S`, columns the simples of `R`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{BracketedPowers, MatrixError, NonNegMatrix, SupportMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error(
        "invalid inclusion matrix: zero rows {zero_rows:?}, zero columns {zero_cols:?} (1-based)"
    )]
    InvalidInclusion {
        zero_rows: Vec<usize>,
        zero_cols: Vec<usize>,
    },
    #[error("ideal must contain at least one column")]
    EmptyIdeal,
    #[error("ideal column {column} out of range 1..={cols}")]
    IdealOutOfRange { column: usize, cols: usize },
    #[error("ideal column {column} is entirely zero")]
    ZeroIdealColumn { column: usize },
    #[error("supports did not stabilize within {cap} levels")]
    NoStabilization { cap: usize },
    #[error("level must be at least 1")]
    ZeroLevel,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Result of a depth computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub min_depth: usize,
    pub min_odd_depth: usize,
    pub min_even_depth: usize,
    /// Least `L` with `supp M^[j+2] = supp M^[j]` for all `j ≥ L`.
    pub stabilization_level: usize,
    /// Rows `J` (1-based) kept when the report is for an ideal.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ideal_rows: Option<Vec<usize>>,
    /// Supports of `M^[0]`, …, `M^[min_depth + 2]`.
    #[serde(skip)]
    pub per_level_supports: Vec<SupportMatrix>,
}

impl DepthReport {
    /// Whether the depth-`n` inclusion holds according to the recorded supports.
    pub fn condition_at(&self, n: usize) -> Option<bool> {
        if n == 0 || n + 1 >= self.per_level_supports.len() {
            return None;
        }
        let upper = &self.per_level_supports[n + 1];
        let lower = &self.per_level_supports[n - 1];
        upper.is_subset_of(lower).ok()
    }
}

/// Column indices (0-based) of the `R`-simples spanning an ideal `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    cols: BTreeSet<usize>,
}

impl IdealSpec {
    pub fn new<I: IntoIterator<Item = usize>>(cols: I) -> Result<Self, DepthError> {
        let cols: BTreeSet<usize> = cols.into_iter().collect();
        if cols.is_empty() {
            return Err(DepthError::EmptyIdeal);
        }
        Ok(IdealSpec { cols })
    }

    /// From 1-based column numbers, as written by users.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(cols: I) -> Result<Self, DepthError> {
        let mut out = BTreeSet::new();
        for c in cols {
            if c == 0 {
                return Err(DepthError::IdealOutOfRange { column: 0, cols: 0 });
            }
            out.insert(c - 1);
        }
        IdealSpec::new(out)
    }

    pub fn cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.cols.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }
}

pub fn validate_inclusion(m: &NonNegMatrix) -> Result<(), DepthError> {
    let zero_rows = m.zero_rows();
    let zero_cols = m.zero_cols();
    if zero_rows.is_empty() && zero_cols.is_empty() {
        Ok(())
    } else {
        Err(DepthError::InvalidInclusion {
            zero_rows: zero_rows.into_iter().map(|i| i + 1).collect(),
            zero_cols: zero_cols.into_iter().map(|j| j + 1).collect(),
        })
    }
}

/// Upper bound on the levels searched before giving up.
pub fn search_cap(m: &NonNegMatrix) -> usize {
    2 * (m.rows() + m.cols()) + 2
}

/// Minimum depth, minimum odd depth and minimum even depth of `M`.
pub fn min_depth(m: &NonNegMatrix) -> Result<DepthReport, DepthError> {
    validate_inclusion(m)?;
    let cap = search_cap(m);
    let mut powers = BracketedPowers::new(m);
    let mut supports: Vec<SupportMatrix> = Vec::new();
    let mut ensure = |k: usize, supports: &mut Vec<SupportMatrix>| {
        while supports.len() <= k {
            supports.push(powers.next().expect("infinite"));
        }
    };
    let holds = |n: usize, supports: &[SupportMatrix]| -> bool {
        supports[n + 1]
            .is_subset_of(&supports[n - 1])
            .expect("bracketed powers of equal parity share a shape")
    };

    let mut odd = None;
    let mut even = None;
    for n in 1..=cap {
        ensure(n + 1, &mut supports);
        if holds(n, &supports) {
            let slot = if n % 2 == 1 { &mut odd } else { &mut even };
            if slot.is_none() {
                *slot = Some(n);
            }
        }
        if odd.is_some() && even.is_some() {
            break;
        }
    }
    let (Some(min_odd_depth), Some(min_even_depth)) = (odd, even) else {
        return Err(DepthError::NoStabilization { cap });
    };
    let min_depth = min_odd_depth.min(min_even_depth);
    ensure(min_depth + 2, &mut supports);
    supports.truncate(min_depth + 3);

    let stabilization_level = (0..supports.len() - 2)
        .rev()
        .take_while(|&j| supports[j] == supports[j + 2])
        .last()
        .unwrap_or(supports.len() - 2);

    Ok(DepthReport {
        min_depth,
        min_odd_depth,
        min_even_depth,
        stabilization_level,
        ideal_rows: None,
        per_level_supports: supports,
    })
}

/// The rows `J` meeting the ideal, and the submatrix `M₁` on `J × ideal`.
pub fn ideal_submatrix(
    m: &NonNegMatrix,
    ideal: &IdealSpec,
) -> Result<(Vec<usize>, NonNegMatrix), DepthError> {
    let cols: Vec<usize> = ideal.cols().collect();
    for &c in &cols {
        if c >= m.cols() {
            return Err(DepthError::IdealOutOfRange {
                column: c + 1,
                cols: m.cols(),
            });
        }
        if (0..m.rows()).all(|i| num_traits::Zero::is_zero(m.get(i, c))) {
            return Err(DepthError::ZeroIdealColumn { column: c + 1 });
        }
    }
    let rows: Vec<usize> = (0..m.rows())
        .filter(|&i| cols.iter().any(|&c| !num_traits::Zero::is_zero(m.get(i, c))))
        .collect();
    let sub = m.submatrix(&rows, &cols)?;
    Ok((rows, sub))
}

/// Ideal depth `d^I(S,R)`: the minimum depth of the submatrix of `M` on the
/// ideal's columns and the rows that meet them.
pub fn ideal_depth(m: &NonNegMatrix, ideal: &IdealSpec) -> Result<DepthReport, DepthError> {
    validate_inclusion(m)?;
    let (rows, sub) = ideal_submatrix(m, ideal)?;
    let mut report = min_depth(&sub)?;
    report.ideal_rows = Some(rows.into_iter().map(|i| i + 1).collect());
    Ok(report)
}

/// Which pair of one-sided structures a bimodule is regarded over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BimoduleSide {
    /// `S`-`S`: `M^[2n]`, indexed by pairs of `S`-simples.
    SS,
    /// `S`-`R`: `M^[2n-1]`, rows `S`-simples, columns `R`-simples.
    SR,
    /// `R`-`S`: the transpose of `M^[2n-1]`.
    RS,
}

/// Support of the simple constituents of `C_n(R,S)` as a bimodule over the
/// given sides. Restricting `R` to an `S`-bimodule gives `M Mᵗ`, and every
/// further tensor factor contributes one more induction-restriction step, so
/// `C_n` is `M^[2n]` over `S`-`S` and `M^[2n-1]` over `S`-`R`.
pub fn simples_support(
    m: &NonNegMatrix,
    n: usize,
    side: BimoduleSide,
) -> Result<SupportMatrix, DepthError> {
    validate_inclusion(m)?;
    if n == 0 {
        return Err(DepthError::ZeroLevel);
    }
    Ok(match side {
        BimoduleSide::SS => crate::matrix::bracketed_power(m, 2 * n),
        BimoduleSide::SR => crate::matrix::bracketed_power(m, 2 * n - 1),
        BimoduleSide::RS => crate::matrix::bracketed_power(m, 2 * n - 1).transpose(),
    })
}

/// h-equivalence over a semisimple ring: equal sets of simple constituents.
pub fn h_equivalent(a: &SupportMatrix, b: &SupportMatrix) -> Result<bool, DepthError> {
    if a.shape() != b.shape() {
        return Err(DepthError::Matrix(MatrixError::DimensionMismatch {
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        }));
    }
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::bracketed_power;

    fn s3_in_s4() -> NonNegMatrix {
        NonNegMatrix::from_rows(&[[1, 1, 0, 0, 0], [0, 1, 1, 1, 0], [0, 0, 0, 1, 1]]).unwrap()
    }

    fn ideal(cols: &[usize]) -> IdealSpec {
        IdealSpec::from_one_based(cols.iter().copied()).unwrap()
    }

    #[test]
    fn s3_in_s4_depths() {
        let r = min_depth(&s3_in_s4()).unwrap();
        assert_eq!((r.min_depth, r.min_odd_depth, r.min_even_depth), (5, 5, 6));
        assert_eq!(r.stabilization_level, 4);
        assert_eq!(r.per_level_supports.len(), 8);
        for n in 1..=4 {
            assert_eq!(r.condition_at(n), Some(false), "n = {n}");
        }
        assert_eq!(r.condition_at(5), Some(true));
        assert_eq!(r.condition_at(6), Some(true));
    }

    #[test]
    fn small_cases() {
        let m2 = NonNegMatrix::from_rows(&[[1, 1, 0], [0, 1, 1]]).unwrap();
        assert_eq!(min_depth(&m2).unwrap().min_depth, 3);
        let id = NonNegMatrix::identity(4).unwrap();
        let r = min_depth(&id).unwrap();
        assert_eq!((r.min_depth, r.min_odd_depth, r.min_even_depth), (1, 1, 2));
        assert_eq!(r.stabilization_level, 0);
    }

    #[test]
    fn multiplicities_do_not_matter() {
        let m = NonNegMatrix::from_rows(&[[3, 1, 0, 0, 0], [0, 2, 1, 7, 0], [0, 0, 0, 1, 4]]).unwrap();
        assert_eq!(min_depth(&m).unwrap().min_depth, 5);
    }

    #[test]
    fn rejects_zero_rows_and_columns() {
        let m = NonNegMatrix::from_rows(&[[1, 0], [0, 0]]).unwrap();
        assert_eq!(
            min_depth(&m),
            Err(DepthError::InvalidInclusion {
                zero_rows: vec![2],
                zero_cols: vec![2]
            })
        );
    }

    #[test]
    fn ideal_depths_of_s3_in_s4() {
        let m = s3_in_s4();
        let cases: [(&[usize], usize, &[usize]); 4] = [
            (&[3], 1, &[2]),
            (&[1, 2, 3], 3, &[1, 2]),
            (&[2, 3, 4], 4, &[1, 2, 3]),
            (&[1, 2, 3, 4], 5, &[1, 2, 3]),
        ];
        for (cols, depth, rows) in cases {
            let r = ideal_depth(&m, &ideal(cols)).unwrap();
            assert_eq!(r.min_depth, depth, "ideal {cols:?}");
            assert_eq!(r.ideal_rows.as_deref(), Some(rows));
        }
    }

    #[test]
    fn ideal_errors() {
        let m = s3_in_s4();
        assert_eq!(IdealSpec::new([]), Err(DepthError::EmptyIdeal));
        assert!(matches!(
            ideal_depth(&m, &ideal(&[6])),
            Err(DepthError::IdealOutOfRange { column: 6, .. })
        ));
        assert!(IdealSpec::from_one_based([0]).is_err());
    }

    #[test]
    fn bimodule_supports() {
        let m = s3_in_s4();
        let s1 = simples_support(&m, 1, BimoduleSide::SS).unwrap();
        let gram = m.mul(&m.transpose()).unwrap();
        assert_eq!(s1, gram.support());
        let s2 = simples_support(&m, 2, BimoduleSide::SS).unwrap();
        assert_eq!(s2, gram.mul(&gram).unwrap().support());
        assert_eq!(simples_support(&m, 1, BimoduleSide::SR).unwrap(), m.support());
        assert_eq!(
            simples_support(&m, 2, BimoduleSide::RS).unwrap(),
            bracketed_power(&m, 3).transpose()
        );
        let id = NonNegMatrix::identity(3).unwrap();
        for n in 1..5 {
            for side in [BimoduleSide::SS, BimoduleSide::SR, BimoduleSide::RS] {
                assert_eq!(
                    simples_support(&id, n, side).unwrap(),
                    SupportMatrix::identity(3).unwrap()
                );
            }
        }
        assert_eq!(simples_support(&m, 0, BimoduleSide::SS), Err(DepthError::ZeroLevel));
    }

    #[test]
    fn h_equivalence_of_supports() {
        let row = |b: &[bool]| SupportMatrix::from_rows(&[b]).unwrap();
        assert!(h_equivalent(&row(&[true, false, true]), &row(&[true, false, true])).unwrap());
        assert!(!h_equivalent(&row(&[true, false, false]), &row(&[true, true, false])).unwrap());
        assert!(h_equivalent(&row(&[true]), &row(&[true, true])).is_err());

        let m = s3_in_s4();
        for side in [BimoduleSide::SS, BimoduleSide::SR] {
            let c5 = simples_support(&m, 5, side).unwrap();
            let c7 = simples_support(&m, 7, side).unwrap();
            assert!(h_equivalent(&c5, &c7).unwrap());
        }
        // before stabilization the S-S supports of C_1 and C_2 differ
        let c1 = simples_support(&m, 1, BimoduleSide::SS).unwrap();
        let c2 = simples_support(&m, 2, BimoduleSide::SS).unwrap();
        assert!(!h_equivalent(&c1, &c2).unwrap());
    }
}
