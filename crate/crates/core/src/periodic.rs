//! Closed forms for continuants of `l`-periodic sequences.
//!
//! With period `l`, the transfer matrix over `m` full periods is the power
//! `A_l(alpha_p)^m`, and a 2x2 power is a combination of `A` and `E` with
//! scaled Chebyshev coefficients. For `m >= 1`, writing `t = tr A_l(alpha_p)`
//! and `d = det A_l(alpha_p) = prod b_j c_j` over one period:
//!
//! ```text
//! K_{lm}(alpha_p)       = S_{m-1}(t, d) K_l(alpha_p) - d S_{m-2}(t, d)
//! K_{lm-1}(alpha_{p+1}) = S_{m-1}(t, d) K_{l-1}(alpha_{p+1})
//! ```
//!
//! and for `-1 <= j <= l - 1`
//!
//! ```text
//! K_{lm+j}(alpha_{p-j}) = K_j(alpha_{p-j}) K_{lm}(alpha_p)
//!                         - b_{p-1} c_{p-1} K_{j-1}(alpha_{p-j}) K_{lm-1}(alpha_{p+1})
//! ```
//!
//! where for `j = -1` the product `-b_{p-1} c_{p-1} K_{-2}(alpha_{p+1})` is
//! taken to be 1.

use std::fmt;
use std::str::FromStr;

use crate::chebyshev::scaled_u_pair;
use crate::continuant::{continuant_det_oracle, continuant_rec, transfer_matrix, PeriodicAlpha};
use crate::mat2::Mat2;
use crate::ring::{product, IntegralDomain, Ring};
use crate::{Error, Result};

/// Quantities of one period that every closed form needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodData<R> {
    /// `A_l(alpha_p)`.
    pub transfer: Mat2<R>,
    pub trace: R,
    /// `prod_{j=1}^{l} b_{p+j-1} c_{p+j-1}`.
    pub det: R,
}

impl<R: Ring> PeriodData<R> {
    pub fn new(alpha: &PeriodicAlpha<R>, p: i64) -> Self {
        let l = alpha.period();
        let transfer = transfer_matrix(alpha, p, l);
        let trace = transfer.trace();
        let bcs: Vec<R> = (0..l as i64).map(|i| alpha.bc(p + i)).collect();
        PeriodData { transfer, trace, det: product(&bcs) }
    }

    /// `K_l(alpha_p)`, the top-left entry of `A_l(alpha_p)`.
    pub fn k_l(&self) -> &R {
        &self.transfer.a
    }

    /// `K_{l-1}(alpha_{p+1})`, the bottom-left entry of `A_l(alpha_p)`.
    pub fn k_l_minus1_shifted(&self) -> &R {
        &self.transfer.c
    }
}

fn check_m(m: i64) -> Result<u64> {
    u64::try_from(m).map_err(|_| Error::InvalidArgument(format!("period count m must be >= 0, got {m}")))
}

/// `K_{lm}(alpha_p)` through the scaled Chebyshev closed form.
pub fn closed_form_klm<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, m: i64) -> Result<R> {
    let m = check_m(m)?;
    if m == 0 {
        return Ok(R::one());
    }
    let data = PeriodData::new(alpha, p);
    let (s1, s2) = scaled_u_pair(m - 1, &data.trace, &data.det);
    Ok(s1.mul(data.k_l()).sub(&data.det.mul(&s2)))
}

/// `K_{lm-1}(alpha_{p+1})` through the scaled Chebyshev closed form.
///
/// `m = 0` gives `K_{-1} = 0`, consistent with `S_{-1} = 0`.
pub fn closed_form_klm_minus1<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, m: i64) -> Result<R> {
    let m = check_m(m)?;
    if m == 0 {
        return Ok(R::zero());
    }
    let data = PeriodData::new(alpha, p);
    let (s1, _) = scaled_u_pair(m - 1, &data.trace, &data.det);
    Ok(s1.mul(data.k_l_minus1_shifted()))
}

fn check_j(l: usize, j: i64) -> Result<()> {
    if j < -1 || j > l as i64 - 1 {
        return Err(Error::InvalidArgument(format!(
            "offset j must lie in -1..={} for period {l}, got {j}",
            l as i64 - 1
        )));
    }
    Ok(())
}

/// `K_{lm+j}(alpha_{p-j})` for `-1 <= j <= l - 1`, combining the two
/// period closed forms with the short prefix continuants `K_j`, `K_{j-1}`.
pub fn closed_form_general<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, m: i64, j: i64) -> Result<R> {
    check_j(alpha.period(), j)?;
    let k_lm = closed_form_klm(alpha, p, m)?;
    let k_lm1 = closed_form_klm_minus1(alpha, p, m)?;
    if j == -1 {
        // K_{-1}(alpha_{p+1}) K_{lm}(alpha_p) vanishes and the convention
        // replaces -b_{p-1} c_{p-1} K_{-2}(alpha_{p+1}) by 1.
        return Ok(k_lm1);
    }
    let head = continuant_rec(alpha, p - j, j)?;
    let head1 = continuant_rec(alpha, p - j, j - 1)?;
    Ok(head.mul(&k_lm).sub(&alpha.bc(p - 1).mul(&head1).mul(&k_lm1)))
}

/// `K_{lm+j}(alpha_{p-j})` by following the proof directly:
/// `k_{lm}(alpha_p) = A_l(alpha_p)^m k_0`, with the power taken through the
/// Chebyshev formula, then one partial-period transfer matrix.
pub fn matpow_general<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, m: i64, j: i64) -> Result<R> {
    check_j(alpha.period(), j)?;
    let m = check_m(m)?;
    let power = PeriodData::new(alpha, p).transfer.pow_cheb(m);
    // k_0 = (1, 0), so k_{lm}(alpha_p) is the first column of the power.
    let (k_lm, k_lm1) = (power.a, power.c);
    if j == -1 {
        return Ok(k_lm1);
    }
    let (top, _) = transfer_matrix(alpha, p - j, j as usize).apply(&k_lm, &k_lm1);
    Ok(top)
}

/// How to evaluate `K_{lm+j}(alpha_{p-j})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Closed,
    Rec,
    Oracle,
    MatPow,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Closed, Strategy::Rec, Strategy::Oracle, Strategy::MatPow];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Closed => "closed",
            Strategy::Rec => "rec",
            Strategy::Oracle => "oracle",
            Strategy::MatPow => "matpow",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown strategy {s:?}")))
    }
}

/// `K_{lm+j}(alpha_{p-j})` by the chosen strategy.
pub fn evaluate<R: IntegralDomain>(
    alpha: &PeriodicAlpha<R>,
    p: i64,
    m: i64,
    j: i64,
    strategy: Strategy,
) -> Result<R> {
    check_j(alpha.period(), j)?;
    let m_checked = check_m(m)?;
    let n = alpha.period() as i64 * m_checked as i64 + j;
    match strategy {
        Strategy::Closed => closed_form_general(alpha, p, m, j),
        Strategy::Rec => continuant_rec(alpha, p - j, n),
        Strategy::Oracle => continuant_det_oracle(alpha, p - j, n),
        Strategy::MatPow => matpow_general(alpha, p, m, j),
    }
}

/// Outcome of comparing a specialized formula against the recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    fn record(&mut self, name: String, passed: bool) {
        self.checks.push(FixtureCheck { name, passed });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FixtureCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn require_period<R: Ring>(alpha: &PeriodicAlpha<R>, l: usize) -> Result<()> {
    if alpha.period() != l {
        return Err(Error::InvalidArgument(format!(
            "fixture expects period {l}, got {}",
            alpha.period()
        )));
    }
    Ok(())
}

/// Constant sequences: `K_m(alpha_p) = S_m(a, bc)` and
/// `K_{m-1}(alpha_{p+1}) = S_{m-1}(a, bc)`; when `bc = 0` these are `a^m`
/// and `a^{m-1}`.
pub fn fixture_l1<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, max_m: u64) -> Result<FixtureReport> {
    require_period(alpha, 1)?;
    let (a, bc) = (alpha.a(p).clone(), alpha.bc(p));
    let mut report = FixtureReport::default();
    for m in 1..=max_m {
        let (s, s_prev) = scaled_u_pair(m, &a, &bc);
        let mi = m as i64;
        report.record(format!("l=1 K_{m}"), s == continuant_rec(alpha, p, mi)?);
        report.record(format!("l=1 K_{}", m - 1), s_prev == continuant_rec(alpha, p + 1, mi - 1)?);
        report.record(format!("l=1 closed K_{m}"), s == closed_form_klm(alpha, p, mi)?);
        if bc.is_zero() {
            report.record(format!("l=1 bc=0 K_{m} = a^{m}"), s == a.pow(m));
        }
    }
    Ok(report)
}

/// Period two, with `a_1, b_1, c_1` at odd and `a_2, b_2, c_2` at even
/// indices:
/// `t = a_1 a_2 - b_1 c_1 - b_2 c_2`, `d = b_1 c_1 b_2 c_2`,
/// `K_{2m}(alpha_p) = S_{m-1}(a_1 a_2 - b_p c_p) - d S_{m-2}` and
/// `K_{2m-1}(alpha_{p+1}) = S_{m-1} a_{p+1}`.
pub fn fixture_l2<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, max_m: u64) -> Result<FixtureReport> {
    require_period(alpha, 2)?;
    let (a1, a2) = (alpha.a(1), alpha.a(2));
    let (bc1, bc2) = (alpha.bc(1), alpha.bc(2));
    let a1a2 = a1.mul(a2);
    let t = a1a2.sub(&bc1).sub(&bc2);
    let d = bc1.mul(&bc2);
    let data = PeriodData::new(alpha, p);
    let mut report = FixtureReport::default();
    report.record("l=2 trace".into(), t == data.trace);
    report.record("l=2 det".into(), d == data.det && d == data.transfer.det());
    for m in 1..=max_m {
        let (s1, s2) = scaled_u_pair(m - 1, &t, &d);
        let mi = m as i64;
        let k2m = s1.mul(&a1a2.sub(&alpha.bc(p))).sub(&d.mul(&s2));
        let k2m1 = s1.mul(alpha.a(p + 1));
        report.record(format!("l=2 K_{}", 2 * m), k2m == continuant_rec(alpha, p, 2 * mi)?);
        report.record(format!("l=2 K_{}", 2 * m - 1), k2m1 == continuant_rec(alpha, p + 1, 2 * mi - 1)?);
        report.record(format!("l=2 closed K_{}", 2 * m), k2m == closed_form_klm(alpha, p, mi)?);
        if d.is_zero() {
            let degenerate = t.pow(m - 1).mul(&a1a2.sub(&alpha.bc(p)));
            report.record(format!("l=2 d=0 K_{}", 2 * m), degenerate == k2m);
        }
    }
    Ok(report)
}

/// Period three, with slots `1, 2, 3` at indices `1, 2, 0 (mod 3)`:
/// `t = a_1 a_2 a_3 - a_1 b_2 c_2 - a_2 b_3 c_3 - a_3 b_1 c_1`,
/// `d = prod b_j c_j`, and the three displays for `K_{3m}(alpha_p)`,
/// `K_{3m-1}(alpha_{p+1})` and `K_{3m+1}(alpha_{p-1})`.
pub fn fixture_l3<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, max_m: u64) -> Result<FixtureReport> {
    require_period(alpha, 3)?;
    let (a1, a2, a3) = (alpha.a(1), alpha.a(2), alpha.a(3));
    let (bc1, bc2, bc3) = (alpha.bc(1), alpha.bc(2), alpha.bc(3));
    let a123 = a1.mul(a2).mul(a3);
    let t = a123.sub(&a1.mul(&bc2)).sub(&a2.mul(&bc3)).sub(&a3.mul(&bc1));
    let d = bc1.mul(&bc2).mul(&bc3);
    // K_3(alpha_p) and K_2(alpha_{p+1})
    let x = a123.sub(&alpha.a(p + 2).mul(&alpha.bc(p))).sub(&alpha.a(p).mul(&alpha.bc(p + 1)));
    let y = alpha.a(p + 1).mul(alpha.a(p + 2)).sub(&alpha.bc(p + 1));
    let data = PeriodData::new(alpha, p);
    let mut report = FixtureReport::default();
    report.record("l=3 trace".into(), t == data.trace);
    report.record("l=3 det".into(), d == data.det && d == data.transfer.det());
    report.record("l=3 K_3".into(), &x == data.k_l());
    report.record("l=3 K_2 shifted".into(), &y == data.k_l_minus1_shifted());
    let a_prev = alpha.a(p - 1);
    let bc_prev = alpha.bc(p - 1);
    for m in 1..=max_m {
        let (s1, s2) = scaled_u_pair(m - 1, &t, &d);
        let mi = m as i64;
        let k3m = s1.mul(&x).sub(&d.mul(&s2));
        let k3m1 = s1.mul(&y);
        let k3p1 = s1
            .mul(&a_prev.mul(&x).sub(&bc_prev.mul(&y)))
            .sub(&d.mul(&s2).mul(a_prev));
        report.record(format!("l=3 K_{}", 3 * m), k3m == continuant_rec(alpha, p, 3 * mi)?);
        report.record(format!("l=3 K_{}", 3 * m - 1), k3m1 == continuant_rec(alpha, p + 1, 3 * mi - 1)?);
        report.record(format!("l=3 K_{}", 3 * m + 1), k3p1 == continuant_rec(alpha, p - 1, 3 * mi + 1)?);
        report.record(format!("l=3 general j=1 m={m}"), k3p1 == closed_form_general(alpha, p, mi, 1)?);
        if d.is_zero() {
            report.record(format!("l=3 d=0 K_{}", 3 * m), t.pow(m - 1).mul(&x) == k3m);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LaurentPoly, Rational};

    fn q(v: i64) -> Rational {
        Rational::from(v)
    }

    fn fib() -> PeriodicAlpha<Rational> {
        PeriodicAlpha::constant(q(1), q(1), q(-1))
    }

    fn qfib() -> PeriodicAlpha<LaurentPoly> {
        let one = LaurentPoly::one();
        PeriodicAlpha::new(
            vec![one.clone(), one.clone()],
            vec![LaurentPoly::q(), LaurentPoly::q_pow(-1)],
            vec![one.neg(), one.neg()],
            1,
        )
        .unwrap()
    }

    #[test]
    fn klm_examples() {
        assert_eq!(closed_form_klm(&fib(), 0, 0).unwrap(), q(1));
        assert_eq!(closed_form_klm(&fib(), 0, 5).unwrap(), q(8));
        let f5: LaurentPoly = "q^-1 + 1 + 2*q + q^2".parse().unwrap();
        assert_eq!(closed_form_klm(&qfib(), 1, 2).unwrap(), f5);
        assert!(closed_form_klm(&fib(), 0, -1).is_err());
    }

    #[test]
    fn klm_minus1_examples() {
        let alpha = PeriodicAlpha::new(vec![q(2), q(-1), q(3)], vec![q(1), q(2), q(1)], vec![q(1), q(1), q(-2)], 0)
            .unwrap();
        assert_eq!(
            closed_form_klm_minus1(&alpha, 0, 1).unwrap(),
            continuant_rec(&alpha, 1, 2).unwrap()
        );
        assert_eq!(closed_form_klm_minus1(&fib(), 0, 6).unwrap(), q(8));
        let f4: LaurentPoly = "q^-1 + 1 + q".parse().unwrap();
        assert_eq!(closed_form_klm_minus1(&qfib(), 1, 2).unwrap(), f4);
        assert_eq!(closed_form_klm_minus1(&fib(), 0, 0).unwrap(), q(0));
    }

    #[test]
    fn general_offsets() {
        let alpha = PeriodicAlpha::new(vec![q(2), q(-1), q(3)], vec![q(1), q(2), q(1)], vec![q(1), q(1), q(-2)], 0)
            .unwrap();
        for m in 1..4 {
            assert_eq!(closed_form_general(&alpha, 0, m, 0).unwrap(), closed_form_klm(&alpha, 0, m).unwrap());
            assert_eq!(
                closed_form_general(&alpha, 0, m, -1).unwrap(),
                closed_form_klm_minus1(&alpha, 0, m).unwrap()
            );
        }
        assert_eq!(
            closed_form_general(&alpha, 0, 2, 1).unwrap(),
            continuant_det_oracle(&alpha, -1, 7).unwrap()
        );
        assert!(closed_form_general(&alpha, 0, 2, 3).is_err());
        assert!(closed_form_general(&alpha, 0, 2, -2).is_err());
    }

    #[test]
    fn strategies_agree_on_small_case() {
        let alpha = PeriodicAlpha::new(vec![q(1), q(0)], vec![q(3), q(-2)], vec![q(1), q(1)], 4).unwrap();
        for m in 0..5 {
            for j in -1..=0 {
                let vals: Vec<_> = Strategy::ALL
                    .iter()
                    .map(|s| evaluate(&alpha, 4, m, j, *s).unwrap())
                    .collect();
                assert!(vals.windows(2).all(|w| w[0] == w[1]), "m={m} j={j}: {vals:?}");
            }
        }
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("fast".parse::<Strategy>().is_err());
    }

    #[test]
    fn l1_degenerate_fixture() {
        let alpha = PeriodicAlpha::constant(q(3), q(0), q(5));
        assert_eq!(continuant_rec(&alpha, 0, 3).unwrap(), q(27));
        assert_eq!(continuant_rec(&alpha, 0, 4).unwrap(), q(81));
        let report = fixture_l1(&alpha, 0, 4).unwrap();
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn l2_degenerate_fixture() {
        let alpha = PeriodicAlpha::new(vec![q(2), q(-3)], vec![q(1), q(0)], vec![q(4), q(1)], 1).unwrap();
        let report = fixture_l2(&alpha, 1, 5).unwrap();
        assert!(report.checks.iter().any(|c| c.name.contains("d=0")));
        assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn fixture_period_mismatch() {
        assert!(fixture_l2(&fib(), 0, 3).is_err());
    }
}
