//! Outcome type shared by all identity checks.

use crate::error::{Error, Result};
use crate::graded::GMatrix;
use crate::scalar::Scalar;

/// Successful verification of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub label: String,
    /// Number of partition terms summed on the brute-force side.
    pub terms: usize,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(label: impl Into<String>, terms: usize) -> Self {
        CheckReport {
            label: label.into(),
            terms,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.terms += other.terms;
        self.notes.extend(other.notes);
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{} ({} terms)", self.label, self.terms);
        for n in &self.notes {
            s.push_str("; ");
            s.push_str(n);
        }
        s
    }
}

pub fn expect_scalar<T: Scalar>(label: &str, lhs: &T, rhs: &T) -> Result<()> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::check(label, format!("lhs = {lhs}, rhs = {rhs}")))
    }
}

pub fn expect_matrix<T: Scalar>(label: &str, lhs: &GMatrix<T>, rhs: &GMatrix<T>) -> Result<()> {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some(d) => Err(Error::check(label, d.to_string())),
    }
}

pub fn expect_vector<T: Scalar>(label: &str, lhs: &[T], rhs: &[T]) -> Result<()> {
    if lhs.len() != rhs.len() {
        return Err(Error::check(
            label,
            format!("length {} vs {}", lhs.len(), rhs.len()),
        ));
    }
    match lhs.iter().zip(rhs).position(|(a, b)| a != b) {
        None => Ok(()),
        Some(k) => Err(Error::check(
            label,
            format!("component {k}: lhs = {}, rhs = {}", lhs[k], rhs[k]),
        )),
    }
}

/// FNV-1a over the index lists of a sequence of splits.
pub fn split_digest<'a>(splits: impl IntoIterator<Item = &'a [usize]>) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for part in splits {
        for &i in part {
            h ^= i as u64 + 1;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        h ^= 0xff;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("{h:016x}")
}
