//! Dense exact linear algebra over a [`Scalar`] field.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Determinant by Gaussian elimination with first-nonzero pivoting.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return T::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        let (top, bottom) = m.split_at_mut(col + 1);
        let prow = &top[col];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot.clone();
            for k in col..n {
                if prow[k].is_zero() {
                    continue;
                }
                let mut t = prow[k].clone();
                t *= &factor;
                row[k] -= &t;
            }
        }
    }
    det
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: Scalar>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = T::one() / m[r][col].clone();
        for x in &mut m[r][col..cols] {
            *x *= &inv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for k in col..cols {
                if prow[k].is_zero() {
                    continue;
                }
                let mut t = prow[k].clone();
                t *= &factor;
                row[k] -= &t;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Basis of `{x : A x = 0}` for `A` given as rows of length `cols`.
pub fn nullspace<T: Scalar>(mut rows: Vec<Vec<T>>, cols: usize) -> Vec<Vec<T>> {
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![T::zero(); cols];
            x[fc] = T::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -rows[r][fc].clone();
            }
            x
        })
        .collect()
}

/// Unique solution of the square system `A x = b`.
pub fn solve<T: Scalar>(a: &[Vec<T>], b: &[T]) -> Result<Vec<T>> {
    let n = a.len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::Reconstruction("singular linear system".into()));
    }
    Ok(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}
