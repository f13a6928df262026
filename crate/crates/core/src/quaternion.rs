//! Quaternion powers.
//!
//! `x = a + bi + cj + dk` acts like a 2x2 matrix with trace `2a` and
//! determinant `N = a^2 + b^2 + c^2 + d^2`, so
//! `x^n = S_{n-1}(2a, N) x - N S_{n-2}(2a, N)`.

use std::fmt;
use std::str::FromStr;

use crate::chebyshev::scaled_u_pair;
use crate::ring::{Rational, Ring};
use crate::{Error, Result};

/// `a + b i + c j + d k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion<R = Rational> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Quaternion<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion::new(R::from_i64(a), R::from_i64(b), R::from_i64(c), R::from_i64(d))
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_i64(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_i64(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_i64(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// `a^2 + b^2 + c^2 + d^2`.
    pub fn norm_sq(&self) -> R {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .fold(R::zero(), |acc, x| acc.add(&x.mul(x)))
    }

    /// Hamilton product.
    pub fn mul(&self, y: &Self) -> Self {
        let x = self;
        Quaternion {
            a: x.a.mul(&y.a).sub(&x.b.mul(&y.b)).sub(&x.c.mul(&y.c)).sub(&x.d.mul(&y.d)),
            b: x.a.mul(&y.b).add(&x.b.mul(&y.a)).add(&x.c.mul(&y.d)).sub(&x.d.mul(&y.c)),
            c: x.a.mul(&y.c).sub(&x.b.mul(&y.d)).add(&x.c.mul(&y.a)).add(&x.d.mul(&y.b)),
            d: x.a.mul(&y.d).add(&x.b.mul(&y.c)).sub(&x.c.mul(&y.b)).add(&x.d.mul(&y.a)),
        }
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(self.a.neg(), self.b.neg(), self.c.neg(), self.d.neg())
    }

    /// `x^n` by repeated multiplication.
    pub fn pow_naive(&self, n: u64) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `x^n` from the Chebyshev form. Rejects `x = 0` for `n >= 1`.
    pub fn pow_cheb(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return Err(Error::InvalidArgument("Chebyshev power of the zero quaternion".into()));
        }
        let norm = self.norm_sq();
        let trace = self.a.add(&self.a);
        let (s1, s2) = scaled_u_pair(n - 1, &trace, &norm);
        Ok(Quaternion {
            a: self.a.mul(&s1).sub(&norm.mul(&s2)),
            b: self.b.mul(&s1),
            c: self.c.mul(&s1),
            d: self.d.mul(&s1),
        })
    }
}

impl<R: fmt::Display> fmt::Display for Quaternion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl<R: Ring + FromStr<Err = Error>> FromStr for Quaternion<R> {
    type Err = Error;

    /// Parses `"a,b,c,d"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().trim_start_matches('(').trim_end_matches(')').split(',').collect();
        let [a, b, c, d] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected four comma-separated components, got {s:?}")));
        };
        Ok(Quaternion::new(a.parse()?, b.parse()?, c.parse()?, d.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Quaternion<Rational>;

    #[test]
    fn units() {
        let m1 = Q::one().neg();
        assert_eq!(Q::i().mul(&Q::j()), Q::k());
        assert_eq!(Q::i().mul(&Q::i()), m1);
        assert_eq!(Q::j().mul(&Q::j()), m1);
        assert_eq!(Q::k().mul(&Q::k()), m1);
        assert_eq!(Q::i().mul(&Q::j()).mul(&Q::k()), m1);
        assert_eq!(Q::from_i64(1, 1, 0, 0).mul(&Q::from_i64(1, -1, 0, 0)), Q::from_i64(2, 0, 0, 0));
    }

    #[test]
    fn naive_powers() {
        assert_eq!(Q::from_i64(3, 1, 4, 1).pow_naive(0), Q::one());
        assert_eq!(Q::i().pow_naive(2), Q::one().neg());
        assert_eq!(Q::from_i64(1, 1, 0, 0).pow_naive(2), Q::from_i64(0, 2, 0, 0));
    }

    #[test]
    fn chebyshev_powers() {
        let x = Q::from_i64(1, 2, 3, 4);
        assert_eq!(x.pow_cheb(1).unwrap(), x);
        assert_eq!(Q::i().pow_cheb(4).unwrap(), Q::one());
        assert_eq!(x.pow_cheb(5).unwrap(), x.pow_naive(5));
        assert!(Q::from_i64(0, 0, 0, 0).pow_cheb(3).is_err());
        assert_eq!(Q::from_i64(0, 0, 0, 0).pow_cheb(0).unwrap(), Q::one());
    }

    #[test]
    fn parse_and_print() {
        let x: Q = "1/2, -3, 0, 7".parse().unwrap();
        assert_eq!(x.to_string(), "1/2,-3,0,7");
        assert_eq!(x.to_string().parse::<Q>().unwrap(), x);
        assert!("1,2,3".parse::<Q>().is_err());
    }
}
