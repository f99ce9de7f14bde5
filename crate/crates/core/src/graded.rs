//! The graded space `C^{2|1}`, its permutation and R-matrix, and sparse
//! exact matrices on graded tensor powers.
//!
//! Basis indices are 1-based in the public API (`1, 2, 3`) and 0-based in
//! flat tensor indices. The first tensor factor is the most significant
//! digit of a flat index.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::check::{expect_matrix, CheckReport};
use crate::error::{Error, Result};
use crate::scalar::{Coupling, Scalar};

/// Dimension of the fundamental space.
pub const N: usize = 3;

/// Z2 degree of a basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Parity of the 1-based index `i`: `[1] = [2] = 0`, `[3] = 1`.
    pub fn of(i: usize) -> Parity {
        if i == 3 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn value(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// `[i]` for a 1-based index.
pub fn grade(i: usize) -> usize {
    Parity::of(i).value()
}

/// `[a]` for a 0-based digit.
fn digit_grade(a: usize) -> usize {
    usize::from(a == 2)
}

/// Base-3 digits of `x`, most significant first.
fn digits(mut x: usize, sites: usize) -> Vec<usize> {
    let mut d = vec![0; sites];
    for k in (0..sites).rev() {
        d[k] = x % N;
        x /= N;
    }
    d
}

fn flat(d: &[usize]) -> usize {
    d.iter().fold(0, |acc, &a| acc * N + a)
}

/// Exact square matrix on `(C^{2|1})^{⊗sites}`, stored as sorted sparse rows
/// without explicit zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct GMatrix<T> {
    sites: usize,
    rows: Vec<Vec<(usize, T)>>,
}

/// First entry at which two matrices differ.
#[derive(Debug, Clone, PartialEq)]
pub struct EntryDifference<T> {
    pub row: usize,
    pub col: usize,
    pub lhs: T,
    pub rhs: T,
}

impl<T: fmt::Display> fmt::Display for EntryDifference<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): lhs = {}, rhs = {}",
            self.row, self.col, self.lhs, self.rhs
        )
    }
}

impl<T: Scalar> GMatrix<T> {
    pub fn zeros(sites: usize) -> Self {
        GMatrix {
            sites,
            rows: vec![Vec::new(); N.pow(sites as u32)],
        }
    }

    pub fn identity(sites: usize) -> Self {
        let dim = N.pow(sites as u32);
        GMatrix {
            sites,
            rows: (0..dim).map(|r| vec![(r, T::one())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_entries(
        sites: usize,
        entries: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Self {
        let dim = N.pow(sites as u32);
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); dim];
        for (r, c, x) in entries {
            assert!(
                r < dim && c < dim,
                "entry ({r}, {c}) outside dimension {dim}"
            );
            rows[r].push((c, x));
        }
        for row in &mut rows {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(usize, T)> = Vec::with_capacity(row.len());
            for (c, x) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lx)) if *lc == c => *lx += &x,
                    _ => merged.push((c, x)),
                }
            }
            merged.retain(|(_, x)| !x.is_zero());
            *row = merged;
        }
        GMatrix { sites, rows }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.rows[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.rows[r]
    }

    /// All nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, x)| (r, *c, x)))
    }

    pub fn scaled(&self, s: &T) -> Self {
        if s.is_zero() {
            return GMatrix::zeros(self.sites);
        }
        GMatrix {
            sites: self.sites,
            rows: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|(c, x)| {
                            let mut y = x.clone();
                            y *= s;
                            (*c, y)
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.sites, other.sites, "matrix size mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
                    let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
                    if take_a {
                        out.push(a[i].clone());
                        i += 1;
                    } else if take_b {
                        let x = if negate {
                            -b[j].1.clone()
                        } else {
                            b[j].1.clone()
                        };
                        out.push((b[j].0, x));
                        j += 1;
                    } else {
                        let mut x = a[i].1.clone();
                        if negate {
                            x -= &b[j].1;
                        } else {
                            x += &b[j].1;
                        }
                        if !x.is_zero() {
                            out.push((a[i].0, x));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        GMatrix {
            sites: self.sites,
            rows,
        }
    }

    fn product(&self, other: &Self) -> Self {
        assert_eq!(self.sites, other.sites, "matrix size mismatch");
        let dim = self.dim();
        let mut acc: Vec<Option<T>> = vec![None; dim];
        let mut touched = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (c, b) in &other.rows[*k] {
                        let mut t = a.clone();
                        t *= b;
                        match &mut acc[*c] {
                            Some(x) => *x += &t,
                            slot @ None => {
                                *slot = Some(t);
                                touched.push(*c);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out = touched
                    .drain(..)
                    .filter_map(|c| {
                        let x = acc[c].take().unwrap();
                        (!x.is_zero()).then_some((c, x))
                    })
                    .collect();
                out
            })
            .collect();
        GMatrix {
            sites: self.sites,
            rows,
        }
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.dim(), "vector length mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut s = T::zero();
                for (c, x) in row {
                    if !v[*c].is_zero() {
                        let mut t = x.clone();
                        t *= &v[*c];
                        s += &t;
                    }
                }
                s
            })
            .collect()
    }

    /// `w M` for a row vector `w`.
    pub fn left_apply(&self, w: &[T]) -> Vec<T> {
        assert_eq!(w.len(), self.dim(), "vector length mismatch");
        let mut out = vec![T::zero(); self.dim()];
        for (r, row) in self.rows.iter().enumerate() {
            if w[r].is_zero() {
                continue;
            }
            for (c, x) in row {
                let mut t = x.clone();
                t *= &w[r];
                out[*c] += &t;
            }
        }
        out
    }

    pub fn first_difference(&self, other: &Self) -> Option<EntryDifference<T>> {
        if self.sites != other.sites {
            return Some(EntryDifference {
                row: self.dim(),
                col: other.dim(),
                lhs: T::zero(),
                rhs: T::zero(),
            });
        }
        for (r, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            if a == b {
                continue;
            }
            let col = a
                .iter()
                .zip(b.iter())
                .find(|(x, y)| x != y)
                .map(|(x, y)| x.0.min(y.0))
                .unwrap_or_else(|| {
                    if a.len() > b.len() {
                        a[b.len()].0
                    } else {
                        b[a.len()].0
                    }
                });
            return Some(EntryDifference {
                row: r,
                col,
                lhs: self.get(r, col),
                rhs: other.get(r, col),
            });
        }
        None
    }

    /// Block `(i, j)` (0-based) with respect to the first tensor factor.
    pub fn aux_block(&self, i: usize, j: usize) -> Self {
        assert!(self.sites >= 1 && i < N && j < N);
        let d = self.dim() / N;
        let rows = self.rows[i * d..(i + 1) * d]
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| *c / d == j)
                    .map(|(c, x)| (c - j * d, x.clone()))
                    .collect()
            })
            .collect();
        GMatrix {
            sites: self.sites - 1,
            rows,
        }
    }
}

impl<'a, T: Scalar> Add for &'a GMatrix<T> {
    type Output = GMatrix<T>;
    fn add(self, other: &'a GMatrix<T>) -> GMatrix<T> {
        self.combine(other, false)
    }
}

impl<'a, T: Scalar> Sub for &'a GMatrix<T> {
    type Output = GMatrix<T>;
    fn sub(self, other: &'a GMatrix<T>) -> GMatrix<T> {
        self.combine(other, true)
    }
}

impl<'a, T: Scalar> Mul for &'a GMatrix<T> {
    type Output = GMatrix<T>;
    fn mul(self, other: &'a GMatrix<T>) -> GMatrix<T> {
        self.product(other)
    }
}

/// Single-site matrix unit `E_ij` (1-based indices).
pub fn matrix_unit<T: Scalar>(i: usize, j: usize) -> GMatrix<T> {
    GMatrix::from_entries(1, [(i - 1, j - 1, T::one())])
}

/// `P(e_i ⊗ e_j) = (-1)^{[i][j]} e_j ⊗ e_i` on `V ⊗ V`.
pub fn graded_permutation<T: Scalar>() -> GMatrix<T> {
    let mut entries = Vec::with_capacity(9);
    for a in 0..N {
        for b in 0..N {
            let s = T::sign(digit_grade(a) * digit_grade(b));
            entries.push((flat(&[b, a]), flat(&[a, b]), s));
        }
    }
    GMatrix::from_entries(2, entries)
}

/// `R(u, v) = I + g(u, v) P`.
pub fn r_matrix<T: Scalar>(u: &T, v: &T, c: &Coupling<T>) -> Result<GMatrix<T>> {
    let g = c.g(u, v)?;
    Ok(&GMatrix::identity(2) + &graded_permutation().scaled(&g))
}

/// Embeds a one- or two-site matrix at `position` (and `position + 1`) of a
/// `total`-site graded tensor product.
pub fn graded_embed<T: Scalar>(
    m: &GMatrix<T>,
    position: usize,
    total: usize,
) -> Result<GMatrix<T>> {
    let positions: Vec<usize> = (position..position + m.sites()).collect();
    graded_embed_at(m, &positions, total)
}

/// Embeds a `k`-site matrix into a `total`-site graded tensor product, its
/// factors landing on the strictly increasing `positions`.
///
/// Koszul rule: the matrix unit `E_ab` placed on factor `p` acquires
/// `(-1)^{([a]+[b]) Σ_{l<p} [t_l]}` on the basis tensor `t`.
pub fn graded_embed_at<T: Scalar>(
    m: &GMatrix<T>,
    positions: &[usize],
    total: usize,
) -> Result<GMatrix<T>> {
    if positions.len() != m.sites() {
        return Err(Error::SizeMismatch {
            sizes: positions.to_vec(),
            len: m.sites(),
        });
    }
    for (k, &p) in positions.iter().enumerate() {
        if p >= total {
            return Err(Error::Range {
                what: "tensor position",
                index: p,
                bound: total,
            });
        }
        if k > 0 && positions[k - 1] >= p {
            return Err(Error::Range {
                what: "tensor position order",
                index: p,
                bound: positions[k - 1] + 1,
            });
        }
    }
    let dim = N.pow(total as u32);
    let mut entries = Vec::new();
    for col in 0..dim {
        let t = digits(col, total);
        let local: Vec<usize> = positions.iter().map(|&p| t[p]).collect();
        // parity of the untouched factors to the left of each position
        let mut left = Vec::with_capacity(positions.len());
        let mut acc = 0;
        let mut next = 0;
        for (l, &tl) in t.iter().enumerate() {
            if next < positions.len() && positions[next] == l {
                left.push(acc);
                next += 1;
            } else {
                acc += digit_grade(tl);
            }
        }
        for (lr, x) in m.row_entries_for_col(flat(&local)) {
            let new = digits(lr, positions.len());
            let s: usize = (0..positions.len())
                .map(|r| (digit_grade(new[r]) + digit_grade(local[r])) * left[r])
                .sum();
            let mut row = t.clone();
            for (r, &p) in positions.iter().enumerate() {
                row[p] = new[r];
            }
            let mut y = x.clone();
            if s % 2 == 1 {
                y = -y;
            }
            entries.push((flat(&row), col, y));
        }
    }
    Ok(GMatrix::from_entries(total, entries))
}

impl<T: Scalar> GMatrix<T> {
    /// Nonzero entries `(row, value)` of column `c`.
    fn row_entries_for_col(&self, c: usize) -> Vec<(usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                row.binary_search_by_key(&c, |e| e.0)
                    .ok()
                    .map(|k| (r, &row[k].1))
            })
            .collect()
    }
}

/// `P_{pq}` on a `total`-site product, `p < q`.
pub fn permutation_at<T: Scalar>(p: usize, q: usize, total: usize) -> Result<GMatrix<T>> {
    graded_embed_at(&graded_permutation(), &[p, q], total)
}

/// `R_{pq}(u, v)` on a `total`-site product, `p < q`.
pub fn r_matrix_at<T: Scalar>(
    u: &T,
    v: &T,
    c: &Coupling<T>,
    p: usize,
    q: usize,
    total: usize,
) -> Result<GMatrix<T>> {
    graded_embed_at(&r_matrix(u, v, c)?, &[p, q], total)
}

/// `R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)`
pub fn yang_baxter_check<T: Scalar>(u: &T, v: &T, w: &T, c: &Coupling<T>) -> Result<CheckReport> {
    let r12 = r_matrix_at(u, v, c, 0, 1, 3)?;
    let r13 = r_matrix_at(u, w, c, 0, 2, 3)?;
    let r23 = r_matrix_at(v, w, c, 1, 2, 3)?;
    expect_matrix(
        "Yang-Baxter",
        &(&(&r12 * &r13) * &r23),
        &(&(&r23 * &r13) * &r12),
    )?;
    Ok(CheckReport::new("Yang-Baxter", 1))
}
