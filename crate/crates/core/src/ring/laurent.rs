use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntegralDomain, Rational, Ring};
use crate::{Error, Result};

/// Laurent polynomial in one variable `q` with integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// `coeff * q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exp, coeff.into());
        p
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^exp`, a unit of the ring.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from an iterator of `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Nonnegative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::default();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at a rational point; fails at `q = 0` when negative powers occur.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let base = if *e < 0 {
                use super::Field;
                x.inv()?
            } else {
                x.clone()
            };
            let term = base.pow(e.unsigned_abs()).mul(&Rational::integer(c.clone()));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Dense ascending coefficients after dividing out the lowest power of `q`,
    /// together with that power.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return (0, Vec::new());
        };
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(lo: i64, v: &[BigInt]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (lo + i as i64, c.clone())))
    }

    /// Greatest common divisor in `Z[q, q^-1]`, normalized to have lowest
    /// exponent 0 and a positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit();
        }
        if other.is_zero() {
            return self.normalize_unit();
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let c = content(&a).gcd(&content(&b));
        let g = dense::gcd_primitive(dense::primitive_part(&a), dense::primitive_part(&b));
        Self::from_dense(0, &g).scale(&c)
    }

    /// Representative of `self` up to units `±q^k`: lowest exponent 0 and
    /// positive leading coefficient.
    pub fn normalize_unit(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return self.clone();
        };
        let shifted = self.shift(-lo);
        if shifted.leading_coeff().is_some_and(|c| c.is_negative()) {
            shifted.neg()
        } else {
            shifted
        }
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Dense univariate arithmetic over `Z`, ascending coefficients, no trailing zeros.
mod dense {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    pub(super) fn trim(v: &mut Vec<BigInt>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub(super) fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
        let c = super::content(v);
        if c.is_zero() {
            return Vec::new();
        }
        let mut out: Vec<BigInt> = v.iter().map(|x| x / &c).collect();
        if out.last().is_some_and(|x| x.is_negative()) {
            out.iter_mut().for_each(|x| *x = -&*x);
        }
        out
    }

    /// Pseudo-remainder of `a` by nonzero `b`.
    pub(super) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lb = &b[db];
        while r.len() > db && !r.is_empty() {
            let shift = r.len() - 1 - db;
            let lr = r.last().unwrap().clone();
            for x in r.iter_mut() {
                *x *= lb;
            }
            for (i, bc) in b.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            trim(&mut r);
        }
        r
    }

    /// Gcd of two primitive polynomials by the primitive remainder sequence.
    pub(super) fn gcd_primitive(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
        trim(&mut a);
        trim(&mut b);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part(&r);
        }
        primitive_part(&a)
    }

    /// Exact quotient `a / b` over `Z`, if it exists.
    pub(super) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut r = a.to_vec();
        trim(&mut r);
        if b.is_empty() {
            return None;
        }
        if r.is_empty() {
            return Some(Vec::new());
        }
        if r.len() < b.len() {
            return None;
        }
        let db = b.len() - 1;
        let lb = &b[db];
        let mut q = vec![BigInt::zero(); r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let (quot, rem) = r.last().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.iter().enumerate() {
                r[i + shift] -= &quot * bc;
            }
            q[shift] = quot;
            trim(&mut r);
        }
        r.is_empty().then_some(q)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }

    fn one() -> Self {
        Self::constant(1)
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(n)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl IntegralDomain for LaurentPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        // rhs = q^lo_b * b with b(0) != 0; q is a unit and coprime to b.
        let (lo_a, a) = self.to_dense();
        let (lo_b, b) = rhs.to_dense();
        let q = dense::div_exact(&a, &b)?;
        Some(Self::from_dense(lo_a - lo_b, &q))
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, e.g. `q^-1 + 1 - 2*q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            match *e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if *e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses sparse term lists such as `1 + 2*q + q^-1`, `3q^2`, `-q^(-2)`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        // Split into signed terms; a '-' right after '^' or '(' belongs to an exponent.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in t.chars() {
            if (ch == '+' || ch == '-') && !matches!(prev, Some('^') | Some('(')) {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                }
                neg ^= ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        pieces.push((neg, cur));

        let mut out = LaurentPoly::default();
        for (neg, body) in pieces {
            let (coeff, exp) = parse_term(&body).ok_or_else(|| {
                Error::Parse(format!("bad term {body:?} in Laurent polynomial {s:?}"))
            })?;
            out.add_term(exp, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

fn parse_term(body: &str) -> Option<(BigInt, i64)> {
    let Some(qpos) = body.find('q') else {
        return Some((body.parse().ok()?, 0));
    };
    let coeff_part = body[..qpos].strip_suffix('*').unwrap_or(&body[..qpos]);
    let coeff = if coeff_part.is_empty() {
        BigInt::one()
    } else {
        coeff_part.parse().ok()?
    };
    let rest = &body[qpos + 1..];
    let exp = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^')?;
        let e = e
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(e);
        e.parse().ok()?
    };
    Some((coeff, exp))
}
