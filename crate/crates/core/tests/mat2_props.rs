mod common;

use common::rng;
use continuants::chebyshev::scaled_u_pair;
use continuants::mat2::Mat2;
use continuants::ring::{Rational, Ring};
use rand::Rng as _;

fn random_matrix(r: &mut rand_chacha::ChaCha8Rng) -> Mat2<Rational> {
    let mut e = || Rational::from(r.gen_range(-5i64..=5));
    Mat2::new(e(), e(), e(), e())
}

#[test]
fn three_powers_agree() {
    let mut r = rng(21);
    for _ in 0..500 {
        let a = random_matrix(&mut r);
        for m in 0..=16 {
            let naive = a.pow_naive(m);
            assert_eq!(a.pow_binary(m), naive, "{a}^{m}");
            assert_eq!(a.pow_cheb(m), naive, "{a}^{m}");
        }
    }
}

#[test]
fn cayley_hamilton() {
    let mut r = rng(22);
    for _ in 0..200 {
        let a = random_matrix(&mut r);
        let lhs = a.mul(&a).sub(&a.scale(&a.trace())).add(&Mat2::scalar(a.det()));
        assert_eq!(lhs, Mat2::scalar(Rational::zero()));
    }
}

#[test]
fn singular_powers_are_trace_multiples() {
    let mut r = rng(23);
    let mut seen = 0;
    while seen < 100 {
        // Rank-one matrices u v^T are singular.
        let (u0, u1, v0, v1): (i64, i64, i64, i64) =
            (r.gen_range(-5..=5), r.gen_range(-5..=5), r.gen_range(-5..=5), r.gen_range(-5..=5));
        let a = Mat2::<Rational>::from_i64(u0 * v0, u0 * v1, u1 * v0, u1 * v1);
        assert!(a.det().is_zero());
        seen += 1;
        for m in 1..=16u64 {
            let expected = a.scale(&a.trace().pow(m - 1));
            assert_eq!(a.pow_cheb(m), expected);
            assert_eq!(a.pow_naive(m), expected);
        }
    }
}

#[test]
fn power_is_affine_in_the_matrix() {
    let mut r = rng(24);
    for _ in 0..100 {
        let a = random_matrix(&mut r);
        for m in 1..=12u64 {
            let (s1, s2) = scaled_u_pair(m - 1, &a.trace(), &a.det());
            let want = a.scale(&s1).sub(&Mat2::scalar(a.det().mul(&s2)));
            assert_eq!(a.pow_naive(m), want);
        }
    }
}

#[test]
fn worked_example() {
    let a = Mat2::<Rational>::from_i64(1, 1, 1, 0);
    assert_eq!(a.pow_cheb(10), Mat2::from_i64(89, 55, 55, 34));
}
