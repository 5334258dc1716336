//! Exact numeric substrate: rationals, integer polynomials, algebraic numbers.

pub mod algebraic;
pub mod element;
pub mod kneading;
pub mod poly;
pub mod rational;

pub use algebraic::{bit_budget, floor, isolate_root, refine, set_bit_budget, sign_at, AlgebraicNumber, DEFAULT_BIT_BUDGET};
pub use element::{BetaElement, BetaRing};
pub use kneading::{beta_from_kneading, poly_from_kneading};
pub use poly::{parse_coefficients, IntegerPolynomial, SturmChain};
pub use rational::{format_rational, int, parse_rational, rat, to_decimal};
