use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Field, IntegralDomain, Ring};
use crate::{Error, Result};

/// The Mersenne prime `2^61 - 1`.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// Residue modulo the odd prime `P`. The modulus is part of the type.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt<const P: u64> {
    residue: u64,
}

/// The default benchmarking ring, integers modulo `2^61 - 1`.
pub type ModInt61 = ModInt<MERSENNE_61>;

impl<const P: u64> ModInt<P> {
    pub const MODULUS: u64 = P;

    pub fn new(value: u64) -> Self {
        ModInt { residue: value % P }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    fn from_big(n: &BigInt) -> Self {
        let m = BigInt::from(P);
        let r = ((n % &m) + &m) % &m;
        ModInt::new(r.to_u64().expect("reduced residue fits in u64"))
    }
}

impl<const P: u64> Ring for ModInt<P> {
    fn zero() -> Self {
        ModInt { residue: 0 }
    }

    fn one() -> Self {
        ModInt::new(1)
    }

    fn add(&self, rhs: &Self) -> Self {
        let s = self.residue as u128 + rhs.residue as u128;
        ModInt { residue: (s % P as u128) as u64 }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let p = self.residue as u128 * rhs.residue as u128;
        ModInt { residue: (p % P as u128) as u64 }
    }

    fn neg(&self) -> Self {
        if self.residue == 0 {
            *self
        } else {
            ModInt { residue: P - self.residue }
        }
    }

    fn from_i64(n: i64) -> Self {
        ModInt { residue: (n as i128).rem_euclid(P as i128) as u64 }
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }
}

impl<const P: u64> IntegralDomain for ModInt<P> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
}

impl<const P: u64> Field for ModInt<P> {
    fn inv(&self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero(format!("inverse of 0 mod {P}")));
        }
        // Fermat: P is prime.
        Ok(self.pow(P - 2))
    }
}

impl<const P: u64> fmt::Display for ModInt<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl<const P: u64> fmt::Debug for ModInt<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, P)
    }
}

impl<const P: u64> FromStr for ModInt<P> {
    type Err = Error;

    /// Parses any integer, reducing it into `0..P`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let n: BigInt = t
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
        Ok(ModInt::from_big(&n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M7 = ModInt<7>;

    #[test]
    fn small_modulus_arithmetic() {
        assert_eq!(M7::from_i64(5).mul(&M7::from_i64(4)), M7::from_i64(6));
        assert_eq!(M7::from_i64(3).div(&M7::from_i64(5)).unwrap(), M7::from_i64(2));
        assert_eq!(M7::from_i64(-1), M7::from_i64(6));
        assert_eq!(M7::from_i64(2).sub(&M7::from_i64(5)), M7::from_i64(4));
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(M7::zero().inv().is_err());
        assert!(ModInt61::zero().inv().is_err());
    }

    #[test]
    fn large_modulus_inverse() {
        let x = ModInt61::from_i64(123_456_789_012);
        assert_eq!(x.mul(&x.inv().unwrap()), ModInt61::one());
        let y = ModInt61::new(MERSENNE_61 - 1);
        assert_eq!(y, ModInt61::from_i64(-1));
        assert_eq!(y.mul(&y), ModInt61::one());
    }

    #[test]
    fn parse_reduces() {
        assert_eq!("-1".parse::<M7>().unwrap(), M7::from_i64(6));
        assert_eq!("100".parse::<M7>().unwrap().residue(), 2);
        assert!("x".parse::<M7>().is_err());
    }
}
