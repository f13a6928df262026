//! Cross-strategy agreement checks for one coefficient set.

use std::fmt;

use crate::continuant::{
    cf_eval, continuant_det_oracle, continuant_leibniz, continuant_rec, continuant_rec_forward, shift_check,
    transfer_matrix, PeriodicAlpha,
};
use crate::periodic::{closed_form_general, matpow_general};
use crate::ring::{product, Field, IntegralDomain};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

/// One identity checked over a range of orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub status: Status,
    /// Number of instances compared.
    pub cases: usize,
    /// First failing instance, or why the check was skipped.
    pub detail: Option<String>,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ({} cases)", self.status, self.name, self.cases)?;
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

/// Limits for [`verify_alpha`].
#[derive(Clone, Copy, Debug)]
pub struct VerifyLimits {
    pub max_n: i64,
    pub max_m: i64,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits { max_n: 10, max_m: 6 }
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name,
            status: if self.failure.is_some() { Status::Fail } else { Status::Pass },
            cases: self.cases,
            detail: self.failure,
        }
    }
}

/// Runs every ring-generic identity on `alpha` at base `p`.
pub fn verify_alpha<R: IntegralDomain>(
    alpha: &PeriodicAlpha<R>,
    p: i64,
    limits: VerifyLimits,
) -> Result<Vec<IdentityCheck>> {
    let l = alpha.period() as i64;
    let mut out = Vec::new();

    let mut t = Tally::new("recurrence = oracle");
    for n in -1..=limits.max_n {
        let rec = continuant_rec(alpha, p, n)?;
        let fwd = continuant_rec_forward(alpha, p, n)?;
        let det = continuant_det_oracle(alpha, p, n)?;
        t.check(rec == det && fwd == det, || format!("n = {n}: rec {rec}, forward {fwd}, Bareiss {det}"));
        if n <= 6 {
            let lb = continuant_leibniz(alpha, p, n)?;
            t.check(lb == det, || format!("n = {n}: Leibniz {lb}, Bareiss {det}"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("closed = recurrence");
    for m in 0..=limits.max_m {
        for j in -1..=l - 1 {
            let closed = closed_form_general(alpha, p, m, j)?;
            let matpow = matpow_general(alpha, p, m, j)?;
            let rec = continuant_rec(alpha, p - j, l * m + j)?;
            t.check(closed == rec && matpow == rec, || {
                format!("m = {m}, j = {j}: closed {closed}, matpow {matpow}, rec {rec}")
            });
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("shift");
    for n in 0..=limits.max_n.min(8) {
        for m in 0..=n {
            t.check(shift_check(alpha, p, n, m)?, || format!("n = {n}, m = {m}"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("transfer entries");
    for n in 1..=limits.max_n {
        let a = transfer_matrix(alpha, p, n as usize);
        let w = alpha.bc(p + n - 1).neg();
        let ok = a.a == continuant_rec(alpha, p, n)?
            && a.c == continuant_rec(alpha, p + 1, n - 1)?
            && a.b == w.mul(&continuant_rec(alpha, p, n - 1)?)
            && a.d == w.mul(&continuant_rec(alpha, p + 1, n - 2)?);
        t.check(ok, || format!("n = {n}: A_n = {a}"));
    }
    out.push(t.finish());

    let mut t = Tally::new("trace/det");
    for n in 1..=limits.max_n {
        let a = transfer_matrix(alpha, p, n as usize);
        let trace = continuant_rec(alpha, p, n)?
            .sub(&alpha.bc(p + n - 1).mul(&continuant_rec(alpha, p + 1, n - 2)?));
        let bcs: Vec<R> = (0..n).map(|i| alpha.bc(p + i)).collect();
        t.check(a.trace() == trace && a.det() == product(&bcs), || format!("n = {n}"));
    }
    out.push(t.finish());

    Ok(out)
}

/// Continued-fraction quotient in cross-multiplied form:
/// `cf * K_{n-1}(alpha_{p+1}) = K_n(alpha_p)`. Orders where an intermediate
/// denominator vanishes are not counted; data with some `c_m != -1` is skipped.
pub fn verify_cf<F: Field>(alpha: &PeriodicAlpha<F>, p: i64, max_n: i64) -> Result<IdentityCheck> {
    let name = "CF quotient";
    let mut t = Tally::new(name);
    for n in 1..=max_n {
        match cf_eval(alpha, p, n) {
            Ok(v) => {
                let lhs = v.mul(&continuant_rec(alpha, p + 1, n - 1)?);
                let rhs = continuant_rec(alpha, p, n)?;
                t.check(lhs == rhs, || format!("n = {n}: {lhs} != {rhs}"));
            }
            Err(Error::DivisionByZero(_)) => {}
            Err(Error::Precondition(msg)) => {
                return Ok(IdentityCheck { name, status: Status::Skip, cases: 0, detail: Some(msg) })
            }
            Err(e) => return Err(e),
        }
    }
    if t.cases == 0 {
        return Ok(IdentityCheck {
            name,
            status: Status::Skip,
            cases: 0,
            detail: Some("every order hit a zero denominator".into()),
        });
    }
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Rational, Ring};

    #[test]
    fn fibonacci_passes() {
        let fib = PeriodicAlpha::constant(Rational::one(), Rational::one(), Rational::from(-1));
        let checks = verify_alpha(&fib, 1, VerifyLimits::default()).unwrap();
        assert_eq!(checks.len(), 5);
        assert!(checks.iter().all(|c| c.status == Status::Pass), "{checks:?}");
        assert_eq!(verify_cf(&fib, 1, 10).unwrap().status, Status::Pass);
    }

    #[test]
    fn cf_skips_without_minus_one() {
        let alpha = PeriodicAlpha::constant(Rational::one(), Rational::one(), Rational::one());
        assert_eq!(verify_cf(&alpha, 0, 5).unwrap().status, Status::Skip);
    }
}
