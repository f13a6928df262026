//! Exact commutative rings.
//!
//! Everything else in the crate is written against [`Ring`], so the same
//! continuant code runs over big rationals, Laurent polynomials in `q`, and
//! word-size modular integers. Elements of different instances are different
//! Rust types, so mixing them is rejected by the compiler.

mod frac;
mod laurent;
mod modint;
mod rational;

use std::fmt::{Debug, Display};

use crate::Result;

pub use frac::LaurentFrac;
pub use laurent::LaurentPoly;
pub use modint::{ModInt, ModInt61, MERSENNE_61};
pub use rational::Rational;

/// A commutative ring with exact, canonical equality.
pub trait Ring: Clone + PartialEq + Eq + Debug + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// The image of an integer under the unique ring map from `Z`.
    fn from_i64(n: i64) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self^exp` by binary exponentiation.
    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Rings without zero divisors in which an exact quotient can be recovered.
///
/// Needed by fraction-free elimination, which divides by the previous pivot
/// and relies on that division being exact.
pub trait IntegralDomain: Ring {
    /// Returns `q` with `q * rhs == self`, or `None` when no such `q` exists
    /// (including `rhs == 0`).
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

/// Rings where every nonzero element is invertible.
pub trait Field: IntegralDomain {
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }
}

/// Sum of a sequence of ring elements.
pub fn sum<'a, R: Ring + 'a>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc.add(x))
}

/// Product of a sequence of ring elements.
pub fn product<'a, R: Ring + 'a>(items: impl IntoIterator<Item = &'a R>) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc.mul(x))
}
