//! Continuants: determinants of tridiagonal matrices built from coefficient
//! sequences `a` (diagonal), `b` (superdiagonal) and `c` (subdiagonal).
//!
//! `K_n(alpha_p)` is the determinant of the `n x n` matrix whose diagonal is
//! `a_p, ..., a_{p+n-1}`, with `K_0 = 1` and `K_{-1} = 0`. It satisfies
//!
//! ```text
//! K_n(alpha_p) = a_p K_{n-1}(alpha_{p+1}) - b_p c_p K_{n-2}(alpha_{p+2})
//! ```
//!
//! and the transfer matrix
//! `A_n(alpha_p) = L(a_p, -b_p c_p) ... L(a_{p+n-1}, -b_{p+n-1} c_{p+n-1})`,
//! with `L(x, y) = [[x, y], [1, 0]]`, carries four neighbouring continuants in
//! its entries.

use itertools::Itertools;

use crate::mat2::Mat2;
use crate::ring::{Field, IntegralDomain, Ring};
use crate::{Error, Result};

/// Coefficient sequences `a`, `b`, `c` of period `l`, indexed by all
/// integers. Entry `m` of each sequence is stored at `(m - base) mod l`.
///
/// Finite data is modelled by taking the period to be the data length and
/// never reading past it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicAlpha<R> {
    a: Vec<R>,
    b: Vec<R>,
    c: Vec<R>,
    base: i64,
}

impl<R: Ring> PeriodicAlpha<R> {
    pub fn new(a: Vec<R>, b: Vec<R>, c: Vec<R>, base: i64) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidArgument("period must be at least 1".into()));
        }
        if a.len() != b.len() || a.len() != c.len() {
            return Err(Error::InvalidArgument(format!(
                "coefficient arrays differ in length: a = {}, b = {}, c = {}",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        Ok(PeriodicAlpha { a, b, c, base })
    }

    /// Constant sequences (`l = 1`).
    pub fn constant(a: R, b: R, c: R) -> Self {
        PeriodicAlpha { a: vec![a], b: vec![b], c: vec![c], base: 0 }
    }

    pub fn period(&self) -> usize {
        self.a.len()
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    fn slot(&self, m: i64) -> usize {
        (m - self.base).rem_euclid(self.period() as i64) as usize
    }

    pub fn a(&self, m: i64) -> &R {
        &self.a[self.slot(m)]
    }

    pub fn b(&self, m: i64) -> &R {
        &self.b[self.slot(m)]
    }

    pub fn c(&self, m: i64) -> &R {
        &self.c[self.slot(m)]
    }

    /// `b_m c_m`.
    pub fn bc(&self, m: i64) -> R {
        self.b(m).mul(self.c(m))
    }

    pub fn arrays(&self) -> (&[R], &[R], &[R]) {
        (&self.a, &self.b, &self.c)
    }

    /// The same sequences, stored so that slot 0 holds index `new_base`.
    pub fn rebase(&self, new_base: i64) -> Self {
        let k = self.slot(new_base);
        let rot = |v: &[R]| {
            let mut v = v.to_vec();
            v.rotate_left(k);
            v
        };
        PeriodicAlpha { a: rot(&self.a), b: rot(&self.b), c: rot(&self.c), base: new_base }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PeriodicAlpha<S> {
        PeriodicAlpha {
            a: self.a.iter().map(&f).collect(),
            b: self.b.iter().map(&f).collect(),
            c: self.c.iter().map(&f).collect(),
            base: self.base,
        }
    }

    /// `L(a_m, -b_m c_m)`.
    pub fn transfer_factor(&self, m: i64) -> Mat2<R> {
        Mat2::new(self.a(m).clone(), self.bc(m).neg(), R::one(), R::zero())
    }
}

/// The pair `(K_j(alpha_p), K_{j-1}(alpha_{p+1}))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KVector<R> {
    pub top: R,
    pub bottom: R,
}

fn check_order(n: i64) -> Result<()> {
    if n < -1 {
        return Err(Error::InvalidArgument(format!("continuant order must be >= -1, got {n}")));
    }
    Ok(())
}

/// The dense `n x n` tridiagonal matrix `T_n(alpha_p)`.
pub fn tridiagonal_matrix<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, n: usize) -> Vec<Vec<R>> {
    let mut t = vec![vec![R::zero(); n]; n];
    for i in 0..n {
        let m = p + i as i64;
        t[i][i] = alpha.a(m).clone();
        if i + 1 < n {
            t[i][i + 1] = alpha.b(m).clone();
            t[i + 1][i] = alpha.c(m).clone();
        }
    }
    t
}

/// Determinant by fraction-free Bareiss elimination with row pivoting.
pub fn bareiss_det<R: IntegralDomain>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotient is exact in an integral domain");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = match n {
        0 => R::one(),
        _ => m[n - 1][n - 1].clone(),
    };
    if negate { det.neg() } else { det }
}

/// Determinant as the signed sum over all `n!` permutations.
pub fn leibniz_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut acc = R::zero();
    for perm in (0..n).permutations(n) {
        let inversions = (0..n)
            .tuple_combinations()
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let term = (0..n).fold(R::one(), |t, i| t.mul(&m[i][perm[i]]));
        acc = if inversions % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `K_n(alpha_p)` by materializing `T_n(alpha_p)` and running Bareiss
/// elimination. Independent of the recurrence it is used to check.
pub fn continuant_det_oracle<R: IntegralDomain>(alpha: &PeriodicAlpha<R>, p: i64, n: i64) -> Result<R> {
    check_order(n)?;
    if n == -1 {
        return Ok(R::zero());
    }
    Ok(bareiss_det(tridiagonal_matrix(alpha, p, n as usize)))
}

/// Largest order accepted by [`continuant_leibniz`].
pub const LEIBNIZ_MAX_ORDER: i64 = 8;

/// `K_n(alpha_p)` by full permutation expansion, for `n <= 8`.
pub fn continuant_leibniz<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, n: i64) -> Result<R> {
    check_order(n)?;
    if n > LEIBNIZ_MAX_ORDER {
        return Err(Error::InvalidArgument(format!(
            "Leibniz expansion limited to n <= {LEIBNIZ_MAX_ORDER}, got {n}"
        )));
    }
    if n == -1 {
        return Ok(R::zero());
    }
    Ok(leibniz_det(&tridiagonal_matrix(alpha, p, n as usize)))
}

/// `K_n(alpha_p)` by the three-term recurrence, unrolled from the far end of
/// the matrix back to index `p`. `O(n)` ring operations, constant memory.
pub fn continuant_rec<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, n: i64) -> Result<R> {
    check_order(n)?;
    // (K_k(alpha_s), K_{k-1}(alpha_{s+1})) starting from s = p + n, k = 0.
    let mut cur = R::one();
    let mut next = R::zero();
    for s in (p..p + n).rev() {
        let k = alpha.a(s).mul(&cur).sub(&alpha.bc(s).mul(&next));
        next = std::mem::replace(&mut cur, k);
    }
    Ok(if n == -1 { R::zero() } else { cur })
}

/// `K_n(alpha_p)` by expanding along the last row:
/// `K_k = a_{p+k-1} K_{k-1} - b_{p+k-2} c_{p+k-2} K_{k-2}`, all at base `p`.
pub fn continuant_rec_forward<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, n: i64) -> Result<R> {
    check_order(n)?;
    let mut prev = R::zero();
    let mut cur = R::one();
    for k in 1..=n {
        let mut next = alpha.a(p + k - 1).mul(&cur);
        if k >= 2 {
            next = next.sub(&alpha.bc(p + k - 2).mul(&prev));
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(if n == -1 { R::zero() } else { cur })
}

/// `A_n(alpha_p)`, the ordered product of `n` transfer factors; `A_0 = E`.
pub fn transfer_matrix<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, n: usize) -> Mat2<R> {
    (0..n as i64).fold(Mat2::identity(), |acc, i| acc.mul(&alpha.transfer_factor(p + i)))
}

/// `k_j(alpha_p) = (K_j(alpha_p), K_{j-1}(alpha_{p+1}))` for `j >= 0`.
pub fn k_vector<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, j: i64) -> Result<KVector<R>> {
    if j < 0 {
        return Err(Error::InvalidArgument(format!("k-vector index must be >= 0, got {j}")));
    }
    Ok(KVector {
        top: continuant_rec(alpha, p, j)?,
        bottom: continuant_rec(alpha, p + 1, j - 1)?,
    })
}

/// Checks `k_{n+1}(alpha_p) = A_m(alpha_p) k_{n+1-m}(alpha_{p+m})`.
pub fn shift_check<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, n: i64, m: i64) -> Result<bool> {
    if m < 0 || m > n {
        return Err(Error::InvalidArgument(format!("shift needs 0 <= m <= n, got m = {m}, n = {n}")));
    }
    let lhs = k_vector(alpha, p, n + 1)?;
    let tail = k_vector(alpha, p + m, n + 1 - m)?;
    let (top, bottom) = transfer_matrix(alpha, p, m as usize).apply(&tail.top, &tail.bottom);
    Ok(lhs == KVector { top, bottom })
}

/// Evaluates `a_p + b_p/(a_{p+1} + b_{p+1}/( ... + b_{p+n-2}/a_{p+n-1}))`
/// from the innermost level outwards.
///
/// Requires every `c_m = -1`, in which case the result is
/// `K_n(alpha_p) / K_{n-1}(alpha_{p+1})`.
pub fn cf_eval<F: Field>(alpha: &PeriodicAlpha<F>, p: i64, n: i64) -> Result<F> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("continued fraction needs n >= 1, got {n}")));
    }
    let minus_one = F::one().neg();
    if alpha.c.iter().any(|c| *c != minus_one) {
        return Err(Error::Precondition("continued-fraction form requires every c_m = -1".into()));
    }
    let mut value = alpha.a(p + n - 1).clone();
    for i in (0..n - 1).rev() {
        let m = p + i;
        let tail = alpha.b(m).div(&value).map_err(|_| {
            Error::DivisionByZero(format!("continued fraction denominator vanishes at level {}", i + 1))
        })?;
        value = alpha.a(m).add(&tail);
    }
    Ok(value)
}
