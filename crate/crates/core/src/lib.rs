//! Exact continuants of periodic tridiagonal sequences.
//!
//! A continuant `K_n` is the determinant of a tridiagonal matrix. This crate
//! computes it four ways over exact rings and checks that they agree:
//!
//! * explicit Bareiss elimination of the dense matrix ([`continuant::continuant_det_oracle`]),
//! * the three-term recurrence ([`continuant::continuant_rec`]),
//! * products and powers of 2x2 transfer matrices ([`continuant::transfer_matrix`], [`mat2::Mat2`]),
//! * closed forms in Chebyshev polynomials of the second kind for periodic
//!   coefficients ([`periodic`]).
//!
//! The same machinery yields q-deformed rationals and q-Fibonacci numbers
//! ([`qrational`]) and quaternion powers ([`quaternion`]).
//!
//! ```
//! use continuants::continuant::{continuant_rec, PeriodicAlpha};
//! use continuants::periodic::closed_form_klm;
//! use continuants::ring::{Rational, Ring};
//!
//! // a = 1, b = 1, c = -1 gives the Fibonacci numbers.
//! let fib = PeriodicAlpha::constant(Rational::one(), Rational::one(), Rational::from(-1));
//! assert_eq!(continuant_rec(&fib, 0, 10)?, Rational::from(89));
//! assert_eq!(closed_form_klm(&fib, 0, 10)?, Rational::from(89));
//! # Ok::<(), continuants::Error>(())
//! ```

pub mod bench;
pub mod chebyshev;
pub mod continuant;
mod error;
pub mod mat2;
pub mod periodic;
pub mod qrational;
pub mod quaternion;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/chebyshev.md")]
    mod chebyshev {}
    #[doc = include_str!("../../../book/src/matrix-powers.md")]
    mod matrix_powers {}
    #[doc = include_str!("../../../book/src/continuants.md")]
    mod continuants {}
    #[doc = include_str!("../../../book/src/periodic.md")]
    mod periodic {}
    #[doc = include_str!("../../../book/src/q-rationals.md")]
    mod q_rationals {}
    #[doc = include_str!("../../../book/src/quaternions.md")]
    mod quaternions {}
    #[doc = include_str!("../../../book/src/benchmarks.md")]
    mod benchmarks {}
}
