//! Exact Bernoulli numbers and the power-sum polynomials built from them.
//!
//! Everything here is exact big-rational arithmetic and runs without `std`
//! (only `alloc` is required):
//!
//! - [`exact`]: rational scalars, binomials, factorials and the small amount of
//!   exact triangular / Hessenberg linear algebra the determinant and matrix
//!   definitions need.
//! - [`umbral`]: Blissard representative calculus. Expand a polynomial in a
//!   dummy symbol, then downgrade `A^k` to the `k`-th element of a sequence.
//! - [`generators`]: Bernoulli prefixes produced by many independent exact
//!   definitions, plus conversion between the `B_1 = -1/2` and `B_1 = +1/2`
//!   conventions.
//! - [`powersum`]: the sums `S_p(n) = 0^p + ... + (n-1)^p` and
//!   `T_p(n) = 1^p + ... + n^p` as exact polynomials in `n`.
//! - [`identities`]: executable forms of the classical identities tying the
//!   above together, used by the verification harness.
#![no_std]

extern crate alloc;

pub mod exact;
pub mod generators;
pub mod identities;
pub mod poly;
pub mod powersum;
pub mod umbral;

pub use exact::{
    binomial, canonical, factorial, parse_rational, zero_power, ExactRational,
    LowerTriangularMatrix,
};
pub use generators::{BernoulliCache, BernoulliSequence, Convention, Method};
pub use poly::Polynomial;
pub use powersum::{BuildMethod, PowerSumPolynomial};
pub use umbral::{IndexedSequence, UmbralPolynomial};
