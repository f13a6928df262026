//! q-deformed rationals and the q-Fibonacci sequence.
//!
//! A rational `r/s >= 1` with even-length continued fraction
//! `[a_1; a_2, ..., a_{2n}]` is deformed into
//!
//! ```text
//! [a_1]_q + q^{a_1} / ([a_2]_{q^-1} + q^{-a_2} / ([a_3]_q + q^{a_3} / ...))
//! ```
//!
//! where `[a]_q = 1 + q + ... + q^{a-1}`. This is a continued fraction with
//! `c_m = -1`, so its value is a quotient of two continuants over Laurent
//! polynomials.

use num_integer::Integer;

use crate::chebyshev::scaled_u_pair;
use crate::continuant::{cf_eval, continuant_rec, PeriodicAlpha};
use crate::ring::{LaurentFrac, LaurentPoly, Ring};
use crate::{Error, Result};

/// A q-rational number: a reduced fraction of Laurent polynomials.
pub type QRational = LaurentFrac;

/// `[a]_q` for `sign = 1`, or `[a]_{q^-1}` for `sign = -1`.
pub fn q_integer(a: i64, sign: i32) -> Result<LaurentPoly> {
    if a <= 0 {
        return Err(Error::InvalidArgument(format!("q-integer needs a >= 1, got {a}")));
    }
    let step = match sign {
        1 => 1,
        -1 => -1,
        _ => return Err(Error::InvalidArgument(format!("sign must be +1 or -1, got {sign}"))),
    };
    Ok(LaurentPoly::from_terms((0..a).map(|k| (step * k, 1))))
}

/// Even-length list of positive continued-fraction digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFDigits {
    digits: Vec<u64>,
}

impl CFDigits {
    pub fn new(digits: Vec<u64>) -> Result<Self> {
        if digits.is_empty() || digits.len() % 2 != 0 {
            return Err(Error::InvalidArgument(format!(
                "need a nonempty even number of digits, got {}",
                digits.len()
            )));
        }
        if digits.contains(&0) {
            return Err(Error::InvalidArgument("continued-fraction digits must be positive".into()));
        }
        Ok(CFDigits { digits })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// The classical value `(numerator, denominator)`.
    pub fn classical_value(&self) -> (u128, u128) {
        let mut num: u128 = 1;
        let mut den: u128 = 0;
        for &a in self.digits.iter().rev() {
            (num, den) = (a as u128 * num + den, num);
        }
        (num, den)
    }
}

/// Regular continued fraction of `r/s`, in its even-length form.
///
/// An odd-length expansion `[..., a_k]` is rewritten as `[..., a_k - 1, 1]`.
pub fn cf_digits(r: u64, s: u64) -> Result<CFDigits> {
    if s == 0 || r < s {
        return Err(Error::InvalidArgument(format!("need r >= s >= 1, got {r}/{s}")));
    }
    if r.gcd(&s) != 1 {
        return Err(Error::InvalidArgument(format!("{r}/{s} is not in lowest terms")));
    }
    let (mut num, mut den) = (r, s);
    let mut digits = Vec::new();
    while den != 0 {
        digits.push(num / den);
        (num, den) = (den, num % den);
    }
    if digits.len() % 2 == 1 {
        let last = digits.pop().expect("at least one digit");
        // The final Euclidean digit is at least 2 unless r/s = 1.
        if last == 1 {
            return Err(Error::InvalidArgument(format!(
                "{r}/{s} has no even-length expansion with positive digits"
            )));
        }
        digits.push(last - 1);
        digits.push(1);
    }
    CFDigits::new(digits)
}

/// The finite coefficient data `a_p = [d_p]_{q^{(-1)^{p-1}}}`,
/// `b_p = q^{(-1)^{p-1} d_p}`, `c_p = -1`, for `p = 1..=2n`.
pub fn q_alpha(digits: &CFDigits) -> PeriodicAlpha<LaurentPoly> {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, &d) in digits.digits().iter().enumerate() {
        let sign: i32 = if i % 2 == 0 { 1 } else { -1 };
        a.push(q_integer(d as i64, sign).expect("digits are positive"));
        b.push(LaurentPoly::q_pow(sign as i64 * d as i64));
    }
    let c = vec![LaurentPoly::one().neg(); a.len()];
    PeriodicAlpha::new(a, b, c, 1).expect("arrays share the digit count")
}

/// `[r/s]_q` as the continuant quotient `K_{2n}(alpha_1) / K_{2n-1}(alpha_2)`.
pub fn q_rational(digits: &CFDigits) -> QRational {
    let alpha = q_alpha(digits);
    let len = digits.digits().len() as i64;
    let num = continuant_rec(&alpha, 1, len).expect("valid order");
    let den = continuant_rec(&alpha, 2, len - 1).expect("valid order");
    QRational::new(num, den).expect("denominator of a q-rational is nonzero")
}

/// `[r/s]_q` by evaluating the q-continued fraction level by level.
pub fn q_rational_cf(digits: &CFDigits) -> Result<QRational> {
    let alpha = q_alpha(digits).map(|x| LaurentFrac::from_poly(x.clone()));
    cf_eval(&alpha, 1, digits.digits().len() as i64)
}

/// `[r/s]_q` for coprime `r >= s >= 1`.
pub fn q_rational_of(r: u64, s: u64) -> Result<QRational> {
    Ok(q_rational(&cf_digits(r, s)?))
}

/// `(K_{2m}(alpha_p), K_{2m-1}(alpha_{p+1}))` for the constant-digit data
/// `a_p = [a]_{q^{(-1)^{p-1}}}`, `b_p = q^{(-1)^{p-1} a}`, `c_p = -1`,
/// from the period-two closed form with trace
/// `[a]_q [a]_{q^-1} + q^a + q^-a` and determinant 1.
pub fn constant_digit_closed(a: i64, p: i64, m: u64) -> Result<(LaurentPoly, LaurentPoly)> {
    if m == 0 {
        return Err(Error::InvalidArgument("need m >= 1".into()));
    }
    let sign_p: i32 = if (p - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let prod = q_integer(a, 1)?.mul(&q_integer(a, -1)?);
    let t = prod.add(&LaurentPoly::q_pow(a)).add(&LaurentPoly::q_pow(-a));
    let (s1, s2) = scaled_u_pair(m - 1, &t, &LaurentPoly::one());
    let even = s1.mul(&prod.add(&LaurentPoly::q_pow(sign_p as i64 * a))).sub(&s2);
    let odd = s1.mul(&q_integer(a, -sign_p)?);
    Ok((even, odd))
}

/// `F_n(q)`: `F_1 = F_2 = 1`, `F_{2m} = F_{2m-1} + q^-1 F_{2m-2}`,
/// `F_{2m+1} = F_{2m} + q F_{2m-1}`.
pub fn q_fibonacci(n: i64) -> Result<LaurentPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("q-Fibonacci index must be >= 1, got {n}")));
    }
    let mut prev = LaurentPoly::one();
    let mut cur = LaurentPoly::one();
    for k in 3..=n {
        let weight = if k % 2 == 0 { LaurentPoly::q_pow(-1) } else { LaurentPoly::q() };
        let next = cur.add(&weight.mul(&prev));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(if n == 1 { prev } else { cur })
}

/// `F_n(q)` in closed form, with `t = 1 + q + q^-1`:
/// `F_{2m+1} = S_{m-1}(t, 1) (1 + q) - S_{m-2}(t, 1)` and
/// `F_{2m+2} = S_m(t, 1)`.
pub fn q_fibonacci_closed(n: i64) -> Result<LaurentPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("q-Fibonacci index must be >= 1, got {n}")));
    }
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let t: LaurentPoly = LaurentPoly::from_terms([(-1, 1), (0, 1), (1, 1)]);
    let one = LaurentPoly::one();
    if n % 2 == 1 {
        let m = ((n - 1) / 2) as u64;
        let (s1, s2) = scaled_u_pair(m - 1, &t, &one);
        Ok(s1.mul(&LaurentPoly::from_terms([(0, 1), (1, 1)])).sub(&s2))
    } else {
        let m = ((n - 2) / 2) as u64;
        Ok(scaled_u_pair(m, &t, &one).0)
    }
}
