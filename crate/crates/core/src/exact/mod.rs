//! Exact scalars and combinatorial primitives.

mod matrix;

use alloc::string::String;
use alloc::format;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use matrix::{
    bareiss_determinant, determinant, hessenberg_leading_minors, invert_unit_lower_triangular,
    LowerTriangularMatrix, MatrixError,
};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid digits in rational literal `{0}`")]
    InvalidDigits(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInt::from(acc)
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `base^exponent` with `0^0 = 1`.
pub fn zero_power(base: &BigInt, exponent: u32) -> BigInt {
    num_traits::pow(base.clone(), exponent as usize)
}

/// `0^p` as a rational: one for `p = 0`, zero otherwise.
pub(crate) fn zero_pow_rational(p: usize) -> ExactRational {
    if p == 0 {
        ExactRational::one()
    } else {
        ExactRational::zero()
    }
}

pub(crate) fn int(value: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(value.into())
}

pub(crate) fn frac(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form: `num/den`, or just `num` when the denominator is 1.
pub fn canonical(value: &ExactRational) -> String {
    if value.denom().is_one() {
        format!("{}", value.numer())
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `[+-]digits[/digits]` into a normalized rational.
pub fn parse_rational(text: &str) -> Result<ExactRational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer = parse_signed(num_text).ok_or_else(|| ParseRationalError::InvalidDigits(text.into()))?;
    let denom = match den_text {
        None => BigInt::one(),
        Some(d) => parse_signed(d).ok_or_else(|| ParseRationalError::InvalidDigits(text.into()))?,
    };
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(text.into()));
    }
    Ok(ExactRational::new(numer, denom))
}

fn parse_signed(text: &str) -> Option<BigInt> {
    let (sign, digits) = match text.as_bytes().first()? {
        b'-' => (Sign::Minus, &text[1..]),
        b'+' => (Sign::Plus, &text[1..]),
        _ => (Sign::Plus, text),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude = BigUint::parse_bytes(digits.as_bytes(), 10)?;
    Some(BigInt::from_biguint(sign, magnitude))
}
