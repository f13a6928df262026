#![allow(dead_code)]

use continuants::continuant::PeriodicAlpha;
use continuants::ring::{Rational, Ring};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `p` in `-3..=3` and `q` in `1..=3`, so the value
/// lies in `[-3, 3]`; zero is drawn with probability 1/7.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(-3..=3);
    let q: i64 = rng.gen_range(1..=3);
    Rational::new(p, q).unwrap()
}

pub fn rational_in(rng: &mut ChaCha8Rng, lo: i64, hi: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi), rng.gen_range(1..=max_den)).unwrap()
}

pub fn random_alpha(rng: &mut ChaCha8Rng, l: usize) -> PeriodicAlpha<Rational> {
    let draw = |rng: &mut ChaCha8Rng| (0..l).map(|_| small_rational(rng)).collect::<Vec<_>>();
    let a = draw(rng);
    let b = draw(rng);
    let c = draw(rng);
    let base = rng.gen_range(-3..=3);
    PeriodicAlpha::new(a, b, c, base).unwrap()
}

/// Same shape as [`random_alpha`] but with every `c_m = -1`.
pub fn random_cf_alpha(rng: &mut ChaCha8Rng, l: usize) -> PeriodicAlpha<Rational> {
    let a = (0..l).map(|_| small_rational(rng)).collect();
    let b = (0..l).map(|_| small_rational(rng)).collect();
    PeriodicAlpha::new(a, b, vec![Rational::from(-1); l], rng.gen_range(-3..=3)).unwrap()
}

/// Classical Fibonacci numbers `F_1 = F_2 = 1` by plain integer addition.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `x^n` over the rationals by repeated multiplication.
pub fn rpow(x: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc.mul(x))
}
