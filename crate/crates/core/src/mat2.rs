//! 2x2 matrices over a ring.

use std::fmt;

use crate::chebyshev::scaled_u_pair;
use crate::ring::Ring;

/// Row-major 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(R::from_i64(a), R::from_i64(b), R::from_i64(c), R::from_i64(d))
    }

    pub fn identity() -> Self {
        Mat2::new(R::one(), R::zero(), R::zero(), R::one())
    }

    pub fn scalar(s: R) -> Self {
        Mat2::new(s.clone(), R::zero(), R::zero(), s)
    }

    pub fn trace(&self) -> R {
        self.a.add(&self.d)
    }

    pub fn det(&self) -> R {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            c: self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            d: self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.add(&rhs.a),
            b: self.b.add(&rhs.b),
            c: self.c.add(&rhs.c),
            d: self.d.add(&rhs.d),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.sub(&rhs.a),
            b: self.b.sub(&rhs.b),
            c: self.c.sub(&rhs.c),
            d: self.d.sub(&rhs.d),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        Mat2 {
            a: self.a.mul(s),
            b: self.b.mul(s),
            c: self.c.mul(s),
            d: self.d.mul(s),
        }
    }

    /// Matrix times column vector `(x, y)`.
    pub fn apply(&self, x: &R, y: &R) -> (R, R) {
        (
            self.a.mul(x).add(&self.b.mul(y)),
            self.c.mul(x).add(&self.d.mul(y)),
        )
    }

    /// `A^m` by `m - 1` successive multiplications.
    pub fn pow_naive(&self, m: u64) -> Self {
        (0..m).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    /// `A^m` by square-and-multiply, skipping products with the identity:
    /// `bitlen(m) - 1` squarings and `popcount(m) - 1` other products.
    pub fn pow_binary(&self, mut m: u64) -> Self {
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(x) => x.mul(&base),
                });
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap_or_else(Self::identity)
    }

    /// `A^m = S_{m-1}(tr A, det A) A - det A S_{m-2}(tr A, det A) E` for
    /// `m >= 1`, and `E` for `m = 0`.
    ///
    /// When `det A = 0` the scaled polynomials reduce to powers of the trace,
    /// so the singular case needs no separate branch.
    pub fn pow_cheb(&self, m: u64) -> Self {
        if m == 0 {
            return Self::identity();
        }
        let t = self.trace();
        let det = self.det();
        let (s1, s2) = scaled_u_pair(m - 1, &t, &det);
        self.scale(&s1).sub(&Self::scalar(det.mul(&s2)))
    }
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
