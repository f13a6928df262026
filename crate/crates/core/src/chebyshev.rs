//! Chebyshev polynomials of the second kind and their square-root-free
//! bivariate form.
//!
//! Closed forms for powers of 2x2 matrices are usually written as
//! `det^{m/2} U_m(tr / (2 sqrt(det)))`. That expression is a polynomial in
//! `tr` and `det`: it is the complete homogeneous polynomial `h_m` evaluated at
//! the two eigenvalues, and it satisfies
//!
//! ```text
//! S_{-1} = 0,  S_0 = 1,  S_m = t * S_{m-1} - d * S_{m-2}
//! ```
//!
//! so [`scaled_u`] computes it in any ring without square roots or
//! eigenvalues.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::mat2::Mat2;
use crate::ring::{Field, Rational, Ring};
use crate::{Error, Result};

/// Dense integer coefficients of `U_n(x)`, ascending by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebU {
    pub n: i64,
    pub coeffs: Vec<BigInt>,
}

impl ChebU {
    /// Horner evaluation in any ring.
    pub fn eval<R: Ring>(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| {
            acc.mul(x).add(&ring_int(c))
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

fn ring_int<R: Ring>(c: &BigInt) -> R {
    match c.to_i64() {
        Some(v) => R::from_i64(v),
        None => {
            // Horner in base 2^32 for coefficients beyond i64.
            let (sign, digits) = c.to_u32_digits();
            let base = R::from_i64(1 << 32);
            let mag = digits
                .iter()
                .rev()
                .fold(R::zero(), |acc, d| acc.mul(&base).add(&R::from_i64(*d as i64)));
            if sign == num_bigint::Sign::Minus { mag.neg() } else { mag }
        }
    }
}

mod poly {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    /// Multiplies by `2x`.
    pub fn times_2x(a: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() {
            return Vec::new();
        }
        std::iter::once(BigInt::zero())
            .chain(a.iter().map(|c| c * 2))
            .collect()
    }
}

/// `U_n(x)` by the three-term recurrence `U_{k+1} = 2x U_k - U_{k-1}`,
/// with the boundary values `U_{-1} = 0` and `U_{-2} = -1`.
pub fn u_coeffs(n: i64) -> Result<ChebU> {
    match n {
        ..=-3 => Err(Error::InvalidArgument(format!("U_n is defined here for n >= -2, got {n}"))),
        -2 => Ok(ChebU { n, coeffs: vec![BigInt::from(-1)] }),
        -1 => Ok(ChebU { n, coeffs: Vec::new() }),
        _ => {
            let mut prev: Vec<BigInt> = Vec::new();
            let mut cur = vec![BigInt::one()];
            for _ in 0..n {
                let next = poly::sub(&poly::times_2x(&cur), &prev);
                prev = std::mem::replace(&mut cur, next);
            }
            Ok(ChebU { n, coeffs: cur })
        }
    }
}

fn pochhammer(a: &Rational, m: u64) -> Rational {
    (0..m).fold(Rational::one(), |acc, i| acc.mul(&a.add(&Rational::from(i as i64))))
}

/// `U_n(x)` from the terminating hypergeometric series
/// `(n+1) 2F1(-n, n+2; 3/2; (1-x)/2)`, evaluated in exact rationals.
pub fn u_coeffs_hypergeometric(n: i64) -> Result<ChebU> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("hypergeometric form needs n >= 0, got {n}")));
    }
    let nn = n as usize;
    let three_halves = Rational::new(3, 2)?;
    let minus_n = Rational::from(-n);
    let n_plus_2 = Rational::from(n + 2);
    let mut acc = vec![Rational::zero(); nn + 1];
    let mut k_fact = Rational::one();
    for k in 0..=nn {
        if k > 0 {
            k_fact = k_fact.mul(&Rational::from(k as i64));
        }
        let weight = pochhammer(&minus_n, k as u64)
            .mul(&pochhammer(&n_plus_2, k as u64))
            .div(&k_fact.mul(&pochhammer(&three_halves, k as u64)))?
            .mul(&Rational::from(n + 1));
        // ((1 - x)/2)^k = 2^-k sum_i C(k,i) (-x)^i
        let scale = weight.div(&Rational::from(2).pow(k as u64))?;
        let mut binom = BigInt::one();
        for i in 0..=k {
            if i > 0 {
                binom = binom * BigInt::from(k - i + 1) / BigInt::from(i);
            }
            let signed = if i % 2 == 1 { -binom.clone() } else { binom.clone() };
            acc[i] = acc[i].add(&scale.mul(&Rational::integer(signed)));
        }
    }
    let coeffs = acc
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "hypergeometric coefficient {c} is not an integer");
            c.numer().clone()
        })
        .collect();
    Ok(ChebU { n, coeffs: poly::trim(coeffs) })
}

/// Coefficient of `u^n` in the power-series inverse of `1 - 2xu + u^2`,
/// truncated at order `max_deg`, computed over `Z[x]`.
pub fn u_genfun_coeff(n: i64, max_deg: i64) -> Result<ChebU> {
    if n < 0 || n > max_deg {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= n <= max_deg, got n = {n}, max_deg = {max_deg}"
        )));
    }
    let denominator: Vec<Vec<BigInt>> = vec![
        vec![BigInt::one()],
        vec![BigInt::zero(), BigInt::from(-2)],
        vec![BigInt::one()],
    ];
    let series = series_inverse(&denominator, max_deg as usize + 1);
    Ok(ChebU { n, coeffs: series[n as usize].clone() })
}

/// First `len` coefficients of `1/f` for a power series `f` with constant
/// term 1, coefficients in `Z[x]`.
fn series_inverse(f: &[Vec<BigInt>], len: usize) -> Vec<Vec<BigInt>> {
    assert!(f.first().is_some_and(|c| c.len() == 1 && c[0].is_one()));
    let mut g: Vec<Vec<BigInt>> = Vec::with_capacity(len);
    for k in 0..len {
        if k == 0 {
            g.push(vec![BigInt::one()]);
            continue;
        }
        let mut acc = Vec::new();
        for i in 1..=k.min(f.len() - 1) {
            acc = poly::add(&acc, &poly::mul(&f[i], &g[k - i]));
        }
        g.push(acc.into_iter().map(|c| -c).collect());
    }
    g
}

/// `h_n(x, y)`, the sum of all monomials `x^i y^j` with `i + j = n`.
pub fn complete_homogeneous<R: Ring>(n: u32, x: &R, y: &R) -> R {
    let mut xs = vec![R::one()];
    for _ in 0..n {
        let next = xs.last().unwrap().mul(x);
        xs.push(next);
    }
    let mut acc = R::zero();
    let mut ypow = R::one();
    for i in (0..=n as usize).rev() {
        acc = acc.add(&xs[i].mul(&ypow));
        ypow = ypow.mul(y);
    }
    acc
}

/// Successive values `S_{-1}, S_0, S_1, ...` of the scaled Chebyshev sequence.
#[derive(Clone, Debug)]
pub struct ScaledCheb<R> {
    t: R,
    d: R,
    prev: R,
    cur: R,
}

impl<R: Ring> ScaledCheb<R> {
    pub fn new(t: R, d: R) -> Self {
        ScaledCheb { t, d, prev: R::zero(), cur: R::one() }
    }

    /// `(S_k, S_{k-1})` after `k` calls to `step`, starting at `k = 0`.
    pub fn current(&self) -> (&R, &R) {
        (&self.cur, &self.prev)
    }

    pub fn step(&mut self) {
        let next = self.t.mul(&self.cur).sub(&self.d.mul(&self.prev));
        self.prev = std::mem::replace(&mut self.cur, next);
    }
}

/// `(S_m, S_{m-1})` for `m >= 0`, in `O(m)` ring operations.
pub fn scaled_u_pair<R: Ring>(m: u64, t: &R, d: &R) -> (R, R) {
    let mut seq = ScaledCheb::new(t.clone(), d.clone());
    for _ in 0..m {
        seq.step();
    }
    let (s, p) = seq.current();
    (s.clone(), p.clone())
}

/// `S_m(t, d) = h_m(rho_+, rho_-)` where `t = rho_+ + rho_-`, `d = rho_+ rho_-`.
pub fn scaled_u<R: Ring>(m: i64, t: &R, d: &R) -> Result<R> {
    match m {
        ..=-2 => Err(Error::InvalidArgument(format!("S_m is defined for m >= -1, got {m}"))),
        -1 => Ok(R::zero()),
        _ => Ok(scaled_u_pair(m as u64, t, d).0),
    }
}

/// `(S_m, S_{m-1})` by a power of the companion matrix `[[t, -d], [1, 0]]`,
/// in `O(log m)` matrix products.
pub fn scaled_u_pair_fast<R: Ring>(m: u64, t: &R, d: &R) -> (R, R) {
    if m == 0 {
        return (R::one(), R::zero());
    }
    // C^m (S_0, S_{-1})^T = (S_m, S_{m-1})^T and S_{-1} = 0: read the first column.
    let companion = Mat2::new(t.clone(), d.neg(), R::one(), R::zero());
    let p = companion.pow_binary(m);
    (p.a, p.c)
}

/// Same value as [`scaled_u`], computed through [`scaled_u_pair_fast`].
pub fn scaled_u_fast<R: Ring>(m: i64, t: &R, d: &R) -> Result<R> {
    match m {
        ..=-2 => Err(Error::InvalidArgument(format!("S_m is defined for m >= -1, got {m}"))),
        -1 => Ok(R::zero()),
        _ => Ok(scaled_u_pair_fast(m as u64, t, d).0),
    }
}

/// Checks `2x U_n = U_{n+1} + U_{n-1}` on coefficient lists.
pub fn pieri_check(n: i64) -> Result<bool> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("Pieri check needs n >= 0, got {n}")));
    }
    let lhs = poly::times_2x(&u_coeffs(n)?.coeffs);
    let rhs = poly::add(&u_coeffs(n + 1)?.coeffs, &u_coeffs(n - 1)?.coeffs);
    Ok(lhs == rhs)
}
