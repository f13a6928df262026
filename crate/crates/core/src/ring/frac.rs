use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::{Field, IntegralDomain, LaurentPoly, Rational, Ring};
use crate::{Error, Result};

/// Element of the field of fractions of `Z[q, q^-1]`.
///
/// Canonical form: numerator and denominator coprime, denominator with
/// lowest exponent 0 and positive leading coefficient. Two fractions are equal
/// iff their stored pairs are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentFrac {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFrac {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("Laurent fraction with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let lo = den.min_exp().expect("nonzero denominator");
        let (mut num, mut den) = (num.shift(-lo), den.shift(-lo));
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(LaurentFrac { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentFrac { num: p, den: LaurentPoly::one() }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Result<Rational> {
        Rational::new(self.num.eval_at_one(), self.den.eval_at_one())
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        self.num.eval(x)?.div(&self.den.eval(x)?)
    }

    fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::new(num, den).expect("denominator is a product of nonzero denominators")
    }
}

impl From<LaurentPoly> for LaurentFrac {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Ring for LaurentFrac {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::from_parts(self.num.add(&rhs.num), self.den.clone());
        }
        Self::from_parts(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::from_parts(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn neg(&self) -> Self {
        LaurentFrac { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_i64(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl IntegralDomain for LaurentFrac {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs).ok()
    }
}

impl Field for LaurentFrac {
    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero Laurent fraction".into()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LaurentFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentFrac {
    type Err = Error;

    /// Accepts a Laurent polynomial, or `(N)/(D)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let unwrap = |x: &str| {
            let x = x.trim();
            x.strip_prefix('(')
                .and_then(|y| y.strip_suffix(')'))
                .unwrap_or(x)
                .to_string()
        };
        match t.find(")/(") {
            Some(i) => {
                let num: LaurentPoly = unwrap(&t[..=i]).parse()?;
                let den: LaurentPoly = unwrap(&t[i + 2..]).parse()?;
                Self::new(num, den)
            }
            None => Ok(Self::from_poly(unwrap(t).parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn division_reduces() {
        let x = LaurentFrac::from_poly(lp("q^2 - 1"));
        let y = LaurentFrac::from_poly(lp("q - 1"));
        assert_eq!(x.div(&y).unwrap(), LaurentFrac::from_poly(lp("q + 1")));
    }

    #[test]
    fn normalization() {
        let f = LaurentFrac::new(lp("2*q^3"), lp("-4*q^5 - 2*q^4")).unwrap();
        assert_eq!(f.numer(), &lp("-q^-1"));
        assert_eq!(f.denom(), &lp("1 + 2*q"));
        let half = LaurentFrac::new(lp("1"), lp("2")).unwrap();
        assert_eq!(half.denom(), &lp("2"));
        assert!(LaurentFrac::new(lp("1"), LaurentPoly::zero()).is_err());
        assert!(LaurentFrac::zero().inv().is_err());
    }

    #[test]
    fn display_and_parse() {
        let f = LaurentFrac::new(lp("1 + q"), lp("1 + q^2")).unwrap();
        assert_eq!(f.to_string(), "(1 + q)/(1 + q^2)");
        assert_eq!(f.to_string().parse::<LaurentFrac>().unwrap(), f);
        assert_eq!("q^-1 + 2".parse::<LaurentFrac>().unwrap().to_string(), "q^-1 + 2");
    }

    #[test]
    fn value_at_one() {
        let f = LaurentFrac::new(lp("1 + q + q^2"), lp("1 + q")).unwrap();
        assert_eq!(f.eval_at_one().unwrap(), Rational::new(3, 2).unwrap());
    }
}
