mod common;

use common::{fibonacci, rng};
use continuants::qrational::{
    cf_digits, constant_digit_closed, q_alpha, q_fibonacci, q_fibonacci_closed, q_integer, q_rational, q_rational_cf,
    q_rational_of, CFDigits,
};
use continuants::continuant::continuant_rec;
use continuants::ring::{LaurentFrac, LaurentPoly, Rational, Ring};
use num_integer::Integer;
use rand::Rng as _;

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn first_q_fibonacci_values() {
    assert_eq!(q_fibonacci(1).unwrap(), LaurentPoly::one());
    assert_eq!(q_fibonacci(2).unwrap(), LaurentPoly::one());
    assert_eq!(q_fibonacci(3).unwrap(), lp("1 + q"));
    assert_eq!(q_fibonacci(4).unwrap(), lp("q^-1 + 1 + q"));
    assert!(q_fibonacci(0).is_err());
}

#[test]
fn closed_form_matches_recurrence() {
    for n in 1..=40 {
        assert_eq!(q_fibonacci_closed(n).unwrap(), q_fibonacci(n).unwrap(), "n = {n}");
    }
}

#[test]
fn q_fibonacci_specializes_and_stays_positive() {
    for n in 1..=40 {
        let f = q_fibonacci(n).unwrap();
        assert_eq!(f.eval_at_one(), num_bigint::BigInt::from(fibonacci(n as usize)));
        assert!(f.terms().all(|(_, c)| c > &num_bigint::BigInt::from(0)), "F_{n} = {f}");
    }
}

#[test]
fn fibonacci_ratios() {
    for n in 1..=8usize {
        let (r, s) = (fibonacci(2 * n + 1) as u64, fibonacci(2 * n) as u64);
        let digits = cf_digits(r, s).unwrap();
        assert_eq!(digits.digits(), vec![1; 2 * n].as_slice());
        let want = LaurentFrac::new(
            q_fibonacci(2 * n as i64 + 1).unwrap(),
            q_fibonacci(2 * n as i64).unwrap(),
        )
        .unwrap();
        assert_eq!(q_rational(&digits), want, "{r}/{s}");
        assert_eq!(q_rational_cf(&digits).unwrap(), want);
    }
}

#[test]
fn q_equals_one_recovers_the_rational() {
    let mut r = rng(51);
    let mut seen = 0;
    while seen < 100 {
        let s: u64 = r.gen_range(1..=200);
        let num: u64 = r.gen_range(s..=400);
        if num.gcd(&s) != 1 || (num, s) == (1, 1) {
            continue;
        }
        seen += 1;
        let digits = cf_digits(num, s).unwrap();
        assert_eq!(digits.classical_value(), (num as u128, s as u128));
        let value = q_rational_of(num, s).unwrap();
        assert_eq!(value.eval_at_one().unwrap(), Rational::new(num as i64, s as i64).unwrap(), "{num}/{s}");
        assert_eq!(q_rational_cf(&digits).unwrap(), value);
    }
}

#[test]
fn digit_expansion_examples() {
    assert_eq!(cf_digits(13, 8).unwrap().digits(), &[1, 1, 1, 1, 1, 1]);
    assert_eq!(cf_digits(21, 13).unwrap().digits(), &[1, 1, 1, 1, 1, 2]);
    assert_eq!(cf_digits(5, 2).unwrap().digits(), &[2, 2]);
    assert!(cf_digits(2, 4).is_err());
    assert!(cf_digits(2, 3).is_err());
    assert!(CFDigits::new(vec![1, 2, 3]).is_err());
    assert!(CFDigits::new(vec![1, 0]).is_err());
}

#[test]
fn small_q_rational() {
    // 5/2 = [2, 2]: [2]_q + q^2 / [2]_{q^-1} = (1 + 2q + q^2 + q^3) / (1 + q).
    let value = q_rational_of(5, 2).unwrap();
    assert_eq!(value, LaurentFrac::new(lp("1 + 2*q + q^2 + q^3"), lp("1 + q")).unwrap());
}

#[test]
fn q_integers() {
    assert_eq!(q_integer(3, 1).unwrap(), lp("1 + q + q^2"));
    assert_eq!(q_integer(3, -1).unwrap(), lp("q^-2 + q^-1 + 1"));
    assert!(q_integer(0, 1).is_err());
}

#[test]
fn constant_digits_closed_form() {
    for a in 1..=4i64 {
        let digits = CFDigits::new(vec![a as u64; 12]).unwrap();
        let alpha = q_alpha(&digits);
        for p in [1i64, 2] {
            for m in 1..=6u64 {
                let (even, odd) = constant_digit_closed(a, p, m).unwrap();
                assert_eq!(even, continuant_rec(&alpha, p, 2 * m as i64).unwrap(), "a={a} p={p} m={m}");
                assert_eq!(odd, continuant_rec(&alpha, p + 1, 2 * m as i64 - 1).unwrap());
            }
        }
    }
}
