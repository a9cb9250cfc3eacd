//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::algebra::Rational;

/// Some solution of `matrix · x = rhs`, or `None` if the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(mut matrix: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !matrix[i][c].is_zero()) else {
            continue;
        };
        matrix.swap(r, p);
        rhs.swap(r, p);
        let inv = Rational::one() / &matrix[r][c];
        for x in matrix[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..rows {
            if i == r || matrix[i][c].is_zero() {
                continue;
            }
            let f = matrix[i][c].clone();
            for j in 0..cols {
                let delta = &f * &matrix[r][j];
                matrix[i][j] -= delta;
            }
            let delta = &f * &rhs[r];
            rhs[i] -= delta;
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if rhs[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}
