//! Scalar field abstraction and the three elementary rational functions
//! `g`, `f`, `h` of the rational R-matrix.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

/// A field in which all identities are evaluated.
///
/// Equality must be exact for the checks in this crate to be meaningful, so
/// the intended instantiation is an arbitrary-precision rational
/// ([`crate::Rat`]). Fixed-width rationals also work for small inputs.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialOrd
    + Num
    + FromPrimitive
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }

    fn ratio(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }

    /// Checked division.
    fn checked_quot(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = self.clone();
        r /= d;
        Ok(r)
    }

    /// `(-1)^k`
    fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + PartialOrd
        + Num
        + FromPrimitive
        + Neg<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
        + for<'a> DivAssign<&'a T>
        + Send
        + Sync
        + 'static
{
}

/// The nonzero constant `c` of the R-matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Coupling<T>(T);

impl<T: Scalar> Coupling<T> {
    pub fn new(c: T) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroCoupling);
        }
        Ok(Coupling(c))
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    /// The reflected coupling `-c`.
    pub fn negated(&self) -> Self {
        Coupling(-self.0.clone())
    }

    /// `g(x, y) = c / (x - y)`
    pub fn g(&self, x: &T, y: &T) -> Result<T> {
        let d = x.clone() - y.clone();
        if d.is_zero() {
            return Err(Error::pole("g", x, y));
        }
        Ok(self.0.clone() / d)
    }

    /// `f(x, y) = (x - y + c) / (x - y)`
    pub fn f(&self, x: &T, y: &T) -> Result<T> {
        let d = x.clone() - y.clone();
        if d.is_zero() {
            return Err(Error::pole("f", x, y));
        }
        Ok((d.clone() + self.0.clone()) / d)
    }

    /// `h(x, y) = (x - y + c) / c`, defined everywhere.
    pub fn h(&self, x: &T, y: &T) -> T {
        (x.clone() - y.clone() + self.0.clone()) / self.0.clone()
    }

    pub fn eval(&self, func: RationalFn, x: &T, y: &T) -> Result<T> {
        match func {
            RationalFn::G => self.g(x, y),
            RationalFn::F => self.f(x, y),
            RationalFn::H => Ok(self.h(x, y)),
        }
    }

    /// Double product `func(A, B) = prod_{a in A} prod_{b in B} func(a, b)`.
    ///
    /// When `A` and `B` are the same set the diagonal pairs are included.
    pub fn set_product(&self, func: RationalFn, a: &[T], b: &[T]) -> Result<T> {
        let mut acc = T::one();
        for x in a {
            for y in b {
                acc *= &self.eval(func, x, y)?;
            }
        }
        Ok(acc)
    }

    pub fn g_set(&self, a: &[T], b: &[T]) -> Result<T> {
        self.set_product(RationalFn::G, a, b)
    }

    pub fn f_set(&self, a: &[T], b: &[T]) -> Result<T> {
        self.set_product(RationalFn::F, a, b)
    }

    pub fn h_set(&self, a: &[T], b: &[T]) -> T {
        self.set_product(RationalFn::H, a, b)
            .expect("h has no poles")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalFn {
    G,
    F,
    H,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(p: i64, q: i64) -> Rat {
        Rat::ratio(p, q)
    }

    fn cp(p: i64) -> Coupling<Rat> {
        Coupling::new(Rat::from_int(p)).unwrap()
    }

    #[test]
    fn g_values() {
        assert_eq!(cp(2).g(&r(3, 1), &r(1, 1)).unwrap(), r(1, 1));
        assert_eq!(cp(1).g(&r(5, 1), &r(2, 1)).unwrap(), r(1, 3));
        assert_eq!(cp(1).g(&r(2, 1), &r(5, 1)).unwrap(), r(-1, 3));
        assert!(matches!(
            cp(1).g(&r(1, 1), &r(1, 1)),
            Err(Error::Pole { func: "g", .. })
        ));
    }

    #[test]
    fn f_values() {
        let c = cp(1);
        assert_eq!(c.f(&r(2, 1), &r(1, 1)).unwrap(), r(2, 1));
        assert_eq!(c.f(&r(0, 1), &r(1, 1)).unwrap(), r(0, 1));
        let c2 = cp(2);
        let y = r(1, 1);
        // x = 3 puts x - c on top of y
        assert!(c2.f(&(r(3, 1) - r(2, 1)), &y).is_err());
        let x = r(7, 2);
        let lhs = c2.f(&(x.clone() - r(2, 1)), &y).unwrap() * c2.f(&y, &x).unwrap();
        assert_eq!(lhs, r(1, 1));
    }

    #[test]
    fn h_values() {
        let c = cp(1);
        assert_eq!(c.h(&r(2, 1), &r(1, 1)), r(2, 1));
        assert_eq!(c.h(&r(9, 4), &r(9, 4)), r(1, 1));
        assert_eq!(cp(2).h(&r(1, 1), &r(3, 1)), r(0, 1));
    }

    #[test]
    fn set_products() {
        let c = cp(1);
        assert_eq!(c.f_set(&[], &[r(1, 1), r(2, 1)]).unwrap(), r(1, 1));
        assert_eq!(c.g_set(&[r(3, 1), r(5, 1)], &[r(1, 1)]).unwrap(), r(1, 8));
        assert_eq!(c.h_set(&[r(4, 3)], &[r(4, 3)]), r(1, 1));
        let err = c.g_set(&[r(3, 1)], &[r(2, 1), r(3, 1)]).unwrap_err();
        assert_eq!(
            err,
            Error::Pole {
                func: "g",
                x: "3".into(),
                y: "3".into()
            }
        );
    }

    #[test]
    fn zero_coupling_rejected() {
        assert_eq!(Coupling::new(Rat::from_int(0)), Err(Error::ZeroCoupling));
    }

    #[test]
    fn fixed_width_rationals_work_too() {
        use num_rational::Rational64;
        let c = Coupling::new(Rational64::from_int(1)).unwrap();
        assert_eq!(
            c.g(&Rational64::from_int(5), &Rational64::from_int(2))
                .unwrap(),
            Rational64::new(1, 3)
        );
    }
}
