//! Timing and operation counts for evaluating `K_{lm}` at large `m`.
//!
//! Runs over word-size modular integers so that costs reflect the number of
//! ring operations rather than the growth of big integers.

use std::cell::Cell;
use std::fmt;
use std::time::Instant;

use crate::chebyshev::scaled_u_pair_fast;
use crate::continuant::{continuant_rec, PeriodicAlpha};
use crate::periodic::{closed_form_klm, PeriodData};
use crate::ring::{ModInt61, Ring};
use crate::{Error, Result};

thread_local! {
    static RING_OPS: Cell<u64> = const { Cell::new(0) };
}

fn bump() {
    RING_OPS.with(|c| c.set(c.get() + 1));
}

/// Ring operations counted on this thread since the last [`reset_ops`].
pub fn ops() -> u64 {
    RING_OPS.with(Cell::get)
}

pub fn reset_ops() {
    RING_OPS.with(|c| c.set(0));
}

/// Ring operations in one 2x2 matrix product (8 products, 4 sums).
pub const RING_OPS_PER_MATMUL: u64 = 12;

/// A ring element whose `add`, `sub`, `mul` and `neg` bump a thread-local counter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counted<R>(pub R);

impl<R: fmt::Display> fmt::Display for Counted<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<R: Ring> Ring for Counted<R> {
    fn zero() -> Self {
        Counted(R::zero())
    }

    fn one() -> Self {
        Counted(R::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        bump();
        Counted(self.0.add(&rhs.0))
    }

    fn sub(&self, rhs: &Self) -> Self {
        bump();
        Counted(self.0.sub(&rhs.0))
    }

    fn mul(&self, rhs: &Self) -> Self {
        bump();
        Counted(self.0.mul(&rhs.0))
    }

    fn neg(&self) -> Self {
        bump();
        Counted(self.0.neg())
    }

    fn from_i64(n: i64) -> Self {
        Counted(R::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Ways of computing `K_{lm}(alpha_p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchStrategy {
    /// Three-term recurrence, `O(lm)`.
    Recurrence,
    /// `A_l(alpha_p)^m` by square-and-multiply, `O(l + log m)`.
    TransferPower,
    /// Closed form with the scaled Chebyshev value by its recurrence, `O(l + m)`.
    ClosedForm,
    /// Closed form with the scaled Chebyshev value by a companion-matrix power, `O(l + log m)`.
    ClosedFormFast,
}

impl BenchStrategy {
    pub const ALL: [BenchStrategy; 4] = [
        BenchStrategy::Recurrence,
        BenchStrategy::TransferPower,
        BenchStrategy::ClosedForm,
        BenchStrategy::ClosedFormFast,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchStrategy::Recurrence => "recurrence",
            BenchStrategy::TransferPower => "transfer-pow",
            BenchStrategy::ClosedForm => "closed",
            BenchStrategy::ClosedFormFast => "closed-fast",
        }
    }

    pub fn is_logarithmic(self) -> bool {
        matches!(self, BenchStrategy::TransferPower | BenchStrategy::ClosedFormFast)
    }
}

/// `K_{lm}(alpha_p)` by the given strategy.
pub fn evaluate_klm<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, m: u64, strategy: BenchStrategy) -> Result<R> {
    let l = alpha.period() as i64;
    match strategy {
        BenchStrategy::Recurrence => continuant_rec(alpha, p, l * m as i64),
        BenchStrategy::TransferPower => Ok(PeriodData::new(alpha, p).transfer.pow_binary(m).a),
        BenchStrategy::ClosedForm => closed_form_klm(alpha, p, m as i64),
        BenchStrategy::ClosedFormFast => {
            if m == 0 {
                return Ok(R::one());
            }
            let data = PeriodData::new(alpha, p);
            let (s1, s2) = scaled_u_pair_fast(m - 1, &data.trace, &data.det);
            Ok(s1.mul(data.k_l()).sub(&data.det.mul(&s2)))
        }
    }
}

/// Ring operations spent by one evaluation.
pub fn count_ops<R: Ring>(alpha: &PeriodicAlpha<R>, p: i64, m: u64, strategy: BenchStrategy) -> Result<u64> {
    let counted = alpha.map(|x| Counted(x.clone()));
    reset_ops();
    evaluate_klm(&counted, p, m, strategy)?;
    Ok(ops())
}

/// One timed evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchReport {
    pub strategy: BenchStrategy,
    pub l: usize,
    pub m: u64,
    pub nanos: u128,
    pub ops: u64,
    /// The computed residue.
    pub digest: u64,
}

impl BenchReport {
    pub const CSV_HEADER: &'static str = "strategy,l,m,ns,ops,digest";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.strategy.name(),
            self.l,
            self.m,
            self.nanos,
            self.ops,
            self.digest
        )
    }
}

/// Evaluates `K_{lm}(alpha_p)` by every strategy for each `m`, failing with
/// [`Error::Mismatch`] if any two disagree.
pub fn run_bench(alpha: &PeriodicAlpha<ModInt61>, p: i64, m_list: &[u64]) -> Result<Vec<BenchReport>> {
    let counted = alpha.map(|x| Counted(*x));
    let mut reports = Vec::new();
    for &m in m_list {
        let mut first: Option<u64> = None;
        for strategy in BenchStrategy::ALL {
            reset_ops();
            let start = Instant::now();
            let value = evaluate_klm(&counted, p, m, strategy)?;
            let nanos = start.elapsed().as_nanos();
            let digest = value.0.residue();
            match first {
                None => first = Some(digest),
                Some(d) if d != digest => {
                    return Err(Error::Mismatch(format!(
                        "m = {m}: {} gives {digest}, expected {d}",
                        strategy.name()
                    )))
                }
                Some(_) => {}
            }
            reports.push(BenchReport { strategy, l: alpha.period(), m, nanos, ops: ops(), digest });
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib_mod() -> PeriodicAlpha<ModInt61> {
        PeriodicAlpha::constant(ModInt61::one(), ModInt61::one(), ModInt61::from_i64(-1))
    }

    #[test]
    fn fibonacci_digest() {
        let reports = run_bench(&fib_mod(), 0, &[10]).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.digest == 89));
    }

    #[test]
    fn zero_periods() {
        let alpha = PeriodicAlpha::new(
            vec![ModInt61::from_i64(3), ModInt61::from_i64(-2), ModInt61::from_i64(7)],
            vec![ModInt61::from_i64(1), ModInt61::from_i64(5), ModInt61::from_i64(2)],
            vec![ModInt61::from_i64(4), ModInt61::from_i64(1), ModInt61::from_i64(-1)],
            0,
        )
        .unwrap();
        let reports = run_bench(&alpha, 0, &[0]).unwrap();
        assert!(reports.iter().all(|r| r.digest == 1));
    }

    #[test]
    fn counter_counts() {
        reset_ops();
        let x = Counted(ModInt61::from_i64(3));
        let _ = x.mul(&x).add(&x).neg();
        assert_eq!(ops(), 3);
    }

    #[test]
    fn csv_shape() {
        let r = BenchReport { strategy: BenchStrategy::ClosedForm, l: 3, m: 10, nanos: 5, ops: 7, digest: 11 };
        assert_eq!(r.csv_row(), "closed,3,10,5,7,11");
        assert_eq!(BenchReport::CSV_HEADER.split(',').count(), r.csv_row().split(',').count());
    }
}
