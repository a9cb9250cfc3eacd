//! Exact nonnegative integer matrices and their boolean supports.
//!
//! Depth questions only ever ask whether some positive multiple of one
//! matrix dominates another, which for nonnegative matrices is a question
//! about zero patterns. The bracketed powers used by the depth search are
//! therefore computed in the boolean semiring; the bigint path exists for
//! reporting the minimal scalar and for cross-checking.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    Empty { rows: usize, cols: usize },
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {actual}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },
    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
}

fn mismatch(a: (usize, usize), b: (usize, usize)) -> MatrixError {
    MatrixError::DimensionMismatch {
        left_rows: a.0,
        left_cols: a.1,
        right_rows: b.0,
        right_cols: b.1,
    }
}

/// Dense row-major matrix of arbitrary-precision nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NonNegMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigUint>,
}

impl NonNegMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigUint>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(NonNegMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from small rows; all rows must have the same length.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != ncols {
                return Err(MatrixError::EntryCount {
                    rows: nrows,
                    cols: ncols,
                    expected: nrows * ncols,
                    actual: entries.len() + row.len(),
                });
            }
            entries.extend(row.iter().map(|&x| BigUint::from(x)));
        }
        NonNegMatrix::new(nrows, ncols, entries)
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        let mut m = NonNegMatrix::zeros(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = BigUint::one();
        }
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self, MatrixError> {
        NonNegMatrix::new(rows, cols, vec![BigUint::zero(); rows * cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigUint] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Rows as machine integers, or `None` if an entry overflows `u64`.
    pub fn to_u64_rows(&self) -> Option<Vec<Vec<u64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_u64).collect())
            .collect()
    }

    pub fn transpose(&self) -> NonNegMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        NonNegMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &NonNegMatrix) -> Result<NonNegMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(mismatch(self.shape(), other.shape()));
        }
        let mut entries = vec![BigUint::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.cols {
                    let b = other.get(j, k);
                    if !b.is_zero() {
                        entries[i * other.cols + k] += a * b;
                    }
                }
            }
        }
        Ok(NonNegMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn support(&self) -> SupportMatrix {
        SupportMatrix {
            rows: self.rows,
            cols: self.cols,
            bits: self.entries.iter().map(|x| !x.is_zero()).collect(),
        }
    }

    /// Exact bracketed power `M^[n]`. Entries grow exponentially with `n`;
    /// depth decisions use [`bracketed_power`] instead.
    pub fn bracketed_power_exact(&self, n: usize) -> NonNegMatrix {
        let gram = self
            .mul(&self.transpose())
            .expect("M Mᵗ is always defined");
        let mut acc = NonNegMatrix::identity(self.rows).expect("rows >= 1");
        for _ in 0..n / 2 {
            acc = acc.mul(&gram).expect("square");
        }
        if n % 2 == 1 {
            acc = acc.mul(self).expect("rows match");
        }
        acc
    }

    pub fn zero_rows(&self) -> Vec<usize> {
        (0..self.rows)
            .filter(|&i| self.row(i).iter().all(Zero::is_zero))
            .collect()
    }

    pub fn zero_cols(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&j| (0..self.rows).all(|i| self.get(i, j).is_zero()))
            .collect()
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<NonNegMatrix, MatrixError> {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        NonNegMatrix::new(rows.len(), cols.len(), entries)
    }
}

impl fmt::Display for NonNegMatrix {
    /// Writes the matrix text format: a `rows cols` header followed by one
    /// line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Zero pattern of a nonnegative matrix: `bit(i, j)` iff the entry is positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupportMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl fmt::Debug for SupportMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SupportMatrix[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, " / ")?;
            }
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
        }
        write!(f, "]")
    }
}

impl SupportMatrix {
    pub fn new(rows: usize, cols: usize, bits: Vec<bool>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty { rows, cols });
        }
        if bits.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                actual: bits.len(),
            });
        }
        Ok(SupportMatrix { rows, cols, bits })
    }

    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let bits: Vec<bool> = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        SupportMatrix::new(nrows, ncols, bits)
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        let mut bits = vec![false; n * n];
        for i in 0..n {
            bits[i * n + i] = true;
        }
        SupportMatrix::new(n, n, bits)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn transpose(&self) -> SupportMatrix {
        let mut bits = Vec::with_capacity(self.bits.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                bits.push(self.get(i, j));
            }
        }
        SupportMatrix {
            rows: self.cols,
            cols: self.rows,
            bits,
        }
    }

    /// Boolean-semiring product: `(i,k)` is set iff some `j` has both
    /// `(i,j)` and `(j,k)` set.
    pub fn bool_product(&self, other: &SupportMatrix) -> Result<SupportMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(mismatch(self.shape(), other.shape()));
        }
        let mut bits = vec![false; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut bits[i * other.cols..(i + 1) * other.cols];
            for j in 0..self.cols {
                if !self.get(i, j) {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot |= other.get(j, k);
                }
            }
        }
        Ok(SupportMatrix {
            rows: self.rows,
            cols: other.cols,
            bits,
        })
    }

    pub fn is_subset_of(&self, other: &SupportMatrix) -> Result<bool, MatrixError> {
        if self.shape() != other.shape() {
            return Err(mismatch(self.shape(), other.shape()));
        }
        Ok(self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b))
    }

    /// Indices of set bits in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / self.cols, k % self.cols))
    }
}

pub fn support(m: &NonNegMatrix) -> SupportMatrix {
    m.support()
}

pub fn bool_product(a: &SupportMatrix, b: &SupportMatrix) -> Result<SupportMatrix, MatrixError> {
    a.bool_product(b)
}

/// Support of `M^[n]`, with `M^[0] = I`, `M^[2k] = (M Mᵗ)^k` and
/// `M^[2k+1] = M^[2k] M`, computed entirely in the boolean semiring.
pub fn bracketed_power(m: &NonNegMatrix, n: usize) -> SupportMatrix {
    BracketedPowers::new(m).nth(n).expect("sequence is infinite")
}

/// Iterator over the supports `M^[0], M^[1], M^[2], …`.
#[derive(Debug, Clone)]
pub struct BracketedPowers {
    forward: SupportMatrix,
    backward: SupportMatrix,
    next: SupportMatrix,
    index: usize,
}

impl BracketedPowers {
    pub fn new(m: &NonNegMatrix) -> Self {
        let forward = m.support();
        let backward = forward.transpose();
        BracketedPowers {
            next: SupportMatrix::identity(m.rows()).expect("rows >= 1"),
            forward,
            backward,
            index: 0,
        }
    }
}

impl Iterator for BracketedPowers {
    type Item = SupportMatrix;

    fn next(&mut self) -> Option<SupportMatrix> {
        // even index -> multiply by M, odd index -> multiply by Mᵗ
        let factor = if self.index.is_multiple_of(2) {
            &self.forward
        } else {
            &self.backward
        };
        let following = self.next.bool_product(factor).expect("shapes alternate");
        self.index += 1;
        Some(std::mem::replace(&mut self.next, following))
    }
}

/// Whether `A ≤ qB` entrywise for some positive integer `q`, together with
/// the least such `q` (1 when `A` is zero).
pub fn dominated_by_scalar_multiple(
    a: &NonNegMatrix,
    b: &NonNegMatrix,
) -> Result<(bool, Option<BigUint>), MatrixError> {
    if a.shape() != b.shape() {
        return Err(mismatch(a.shape(), b.shape()));
    }
    let mut q = BigUint::one();
    for (x, y) in a.entries().iter().zip(b.entries()) {
        if x.is_zero() {
            continue;
        }
        if y.is_zero() {
            return Ok((false, None));
        }
        let ratio = (x + y - BigUint::one()) / y;
        if ratio > q {
            q = ratio;
        }
    }
    Ok((true, Some(q)))
}
