//! Scalar field abstraction.
//!
//! Every structure in the crate is generic over [`Scalar`]. The identities
//! checked here are equalities, so the scalar type must be exact; the
//! crate-level aliases fix it to arbitrary-precision rationals.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_traits::{FromPrimitive, Num};

/// An exact field element.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Num
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every field of characteristic zero contains the integers")
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let mut p = a.clone();
        p *= b;
        *self += &p;
    }

    /// `self * other` without consuming either side.
    fn times(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p *= other;
        p
    }

    /// Non-negative integer power.
    fn pow_u32(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + Num
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn rational_helpers_are_exact() {
        let a = Rational::new(1.into(), 3.into());
        let mut acc = Rational::from_int(1);
        acc.add_product(&a, &Rational::from_int(3));
        assert_eq!(acc, Rational::from_int(2));
        assert_eq!(a.pow_u32(3), Rational::new(1.into(), 27.into()));
        assert_eq!(a.pow_u32(0), Rational::from_int(1));
    }

    #[test]
    fn small_rationals_also_qualify() {
        type Q64 = num_rational::Ratio<i64>;
        let x = Q64::from_int(-2);
        assert_eq!(x.pow_u32(2), Q64::from_int(4));
    }
}
