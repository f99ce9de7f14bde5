//! Ordered sets of spectral parameters and their ordered partitions.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Pairwise-distinct parameters kept in construction order ("natural order").
#[derive(Debug, Clone, PartialEq)]
pub struct VarSet<T>(Vec<T>);

impl<T: Scalar> VarSet<T> {
    pub fn new(xs: Vec<T>) -> Result<Self> {
        for (k, x) in xs.iter().enumerate() {
            if xs[..k].contains(x) {
                return Err(Error::Duplicate(x.to_string()));
            }
        }
        Ok(VarSet(xs))
    }

    pub fn empty() -> Self {
        VarSet(Vec::new())
    }

    pub fn singleton(x: T) -> Self {
        VarSet(vec![x])
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    /// Every element shifted by `d`.
    pub fn shifted(&self, d: &T) -> Self {
        VarSet(self.0.iter().map(|x| x.clone() + d.clone()).collect())
    }

    /// `{self, other}`; fails if the union would repeat a value.
    pub fn union(&self, other: &[T]) -> Result<Self> {
        let mut xs = self.0.clone();
        xs.extend_from_slice(other);
        VarSet::new(xs)
    }

    /// The set with element `k` removed.
    pub fn without(&self, k: usize) -> Self {
        let mut xs = self.0.clone();
        xs.remove(k);
        VarSet(xs)
    }

    /// Sub-list picked by increasing indices.
    pub fn pick(&self, idx: &[usize]) -> Self {
        VarSet(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// All ordered partitions into parts of the given sizes.
    pub fn splits(&self, sizes: &[usize]) -> Result<Vec<Split<T>>> {
        enumerate_splits(self, sizes)
    }
}

impl<T> Deref for VarSet<T> {
    type Target = [T];

    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T: std::fmt::Display> std::fmt::Display for VarSet<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

pub fn make_varset<T: Scalar>(xs: Vec<T>) -> Result<VarSet<T>> {
    VarSet::new(xs)
}

pub fn shift_set<T: Scalar>(s: &VarSet<T>, d: &T) -> VarSet<T> {
    s.shifted(d)
}

/// One ordered partition of a parent set.
#[derive(Debug, Clone, PartialEq)]
pub struct Split<T> {
    parts: Vec<VarSet<T>>,
    indices: Vec<Vec<usize>>,
}

impl<T: Scalar> Split<T> {
    pub fn parts(&self) -> &[VarSet<T>] {
        &self.parts
    }

    pub fn part(&self, k: usize) -> &VarSet<T> {
        &self.parts[k]
    }

    /// Positions in the parent set of the elements of part `k`.
    pub fn indices(&self, k: usize) -> &[usize] {
        &self.indices[k]
    }
}

/// All `multinomial(|s|; sizes)` splits of `s`, each part in natural order.
///
/// Enumeration is lexicographic in the index subset of the first part, then
/// recursively in the remaining parts.
pub fn enumerate_splits<T: Scalar>(s: &VarSet<T>, sizes: &[usize]) -> Result<Vec<Split<T>>> {
    if sizes.iter().sum::<usize>() != s.len() {
        return Err(Error::SizeMismatch {
            sizes: sizes.to_vec(),
            len: s.len(),
        });
    }
    let all: Vec<usize> = (0..s.len()).collect();
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(sizes.len());
    split_rec(&all, sizes, &mut acc, &mut out);
    Ok(out
        .into_iter()
        .map(|indices| Split {
            parts: indices.iter().map(|ix| s.pick(ix)).collect(),
            indices,
        })
        .collect())
}

fn split_rec(
    pool: &[usize],
    sizes: &[usize],
    acc: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some((&k, rest)) = sizes.split_first() else {
        out.push(acc.clone());
        return;
    };
    for chosen in combinations(pool.len(), k) {
        let part: Vec<usize> = chosen.iter().map(|&i| pool[i]).collect();
        let remaining: Vec<usize> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| !chosen.contains(i))
            .map(|(_, &x)| x)
            .collect();
        acc.push(part);
        split_rec(&remaining, rest, acc, out);
        acc.pop();
    }
}

/// k-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn set(xs: &[i64]) -> VarSet<Rat> {
        VarSet::new(xs.iter().map(|&x| Rat::from_int(x)).collect()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(set(&[1, 2, 3]).len(), 3);
        assert!(set(&[]).is_empty());
        assert_eq!(
            VarSet::new(vec![Rat::from_int(1), Rat::from_int(1)]),
            Err(Error::Duplicate("1".into()))
        );
    }

    #[test]
    fn split_counts() {
        let s = set(&[1, 2, 3]);
        assert_eq!(s.splits(&[1, 2]).unwrap().len(), 3);
        let id = s.splits(&[3]).unwrap();
        assert_eq!(id.len(), 1);
        assert_eq!(id[0].part(0), &s);
        assert_eq!(set(&[1, 2, 3, 4]).splits(&[2, 1, 1]).unwrap().len(), 12);
        assert!(matches!(s.splits(&[1, 1]), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn split_order_is_lexicographic() {
        let s = set(&[10, 20, 30]);
        let firsts: Vec<Vec<usize>> = s
            .splits(&[2, 1])
            .unwrap()
            .iter()
            .map(|sp| sp.indices(0).to_vec())
            .collect();
        assert_eq!(firsts, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn empty_combinations() {
        assert_eq!(combinations(0, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn shifts() {
        let s = set(&[1, 2]);
        let one = Rat::from_int(1);
        assert_eq!(shift_set(&s, &one), set(&[2, 3]));
        assert_eq!(shift_set(&s, &Rat::from_int(0)), s);
        assert_eq!(shift_set(&shift_set(&s, &one), &-one), s);
    }
}
