//! Blissard representative (umbral) calculus.
//!
//! An expression such as `(B + 1)^p` is a polynomial in a dummy symbol `A`.
//! It is fully expanded first, and only then is every `A^k` replaced by the
//! `k`-th element of a sequence (the "downgrade"). Downgrading does not
//! commute with multiplication: `downgrade(p * q) != downgrade(p) * downgrade(q)`
//! in general, which is why [`downgrade`] only accepts an already expanded
//! [`UmbralPolynomial`].

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{binomial, canonical, factorial, int, ExactRational};
use crate::poly::Polynomial;

/// Polynomial in the umbral symbol `A`; coefficient `k` multiplies `A^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UmbralPolynomial(Polynomial);

/// Downgrade target: element `k` stands in for `A^k`. Never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedSequence(Vec<ExactRational>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UmbralError {
    #[error("an indexed sequence needs at least the element a_0")]
    EmptySequence,
    #[error("downgrade needs {needed} sequence values, only {available} supplied")]
    SequenceTooShort { needed: usize, available: usize },
}

impl UmbralPolynomial {
    pub fn zero() -> Self {
        Self(Polynomial::zero())
    }

    pub fn from_coefficients(coeffs: Vec<ExactRational>) -> Self {
        Self(Polynomial::from_coefficients(coeffs))
    }

    /// The bare symbol `A^k`.
    pub fn symbol_power(k: usize) -> Self {
        Self(Polynomial::monomial(ExactRational::one(), k))
    }

    pub fn constant(c: ExactRational) -> Self {
        Self(Polynomial::constant(c))
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        self.0.coefficients()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self(self.0.scale(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }
}

impl fmt::Display for UmbralPolynomial {
    /// `c0 + c1*A + c2*A^2 + ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", canonical(&magnitude))?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{}*", canonical(&magnitude))?;
                    }
                    f.write_str("A")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl IndexedSequence {
    pub fn new(values: Vec<ExactRational>) -> Result<Self, UmbralError> {
        if values.is_empty() {
            return Err(UmbralError::EmptySequence);
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, k: usize) -> Option<&ExactRational> {
        self.0.get(k)
    }
}

/// `(A + x)^n` expanded in powers of `A`.
pub fn shift_power(x: &ExactRational, n: usize) -> UmbralPolynomial {
    let mut coeffs = alloc::vec![ExactRational::zero(); n + 1];
    let mut x_pow = ExactRational::one();
    for k in (0..=n).rev() {
        coeffs[k] = int(binomial(n as u64, k as i64)) * &x_pow;
        x_pow *= x;
    }
    UmbralPolynomial::from_coefficients(coeffs)
}

/// Replaces `A^k` by `seq[k]` in a fully expanded polynomial.
pub fn downgrade(p: &UmbralPolynomial, seq: &IndexedSequence) -> Result<ExactRational, UmbralError> {
    let needed = p.coefficients().len();
    if needed > seq.len() {
        return Err(UmbralError::SequenceTooShort { needed, available: seq.len() });
    }
    Ok(p.coefficients()
        .iter()
        .zip(seq.values())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, a)| c * a)
        .fold(ExactRational::zero(), |acc, t| acc + t))
}

/// `binom(A + shift, p) = (A + shift)(A + shift - 1)...(A + shift - p + 1) / p!`
pub fn falling_binomial(shift: &ExactRational, p: usize) -> UmbralPolynomial {
    let lowest = shift - int(p as u64) + int(1);
    let product = Polynomial::rising(&lowest, p);
    UmbralPolynomial(product.scale(&ExactRational::new(One::one(), factorial(p as u64))))
}

pub fn poly_multiply(a: &UmbralPolynomial, b: &UmbralPolynomial) -> UmbralPolynomial {
    UmbralPolynomial(&a.0 * &b.0)
}

/// Expands `(A + n)^m` with `n` left symbolic, downgrades `A` against `seq`,
/// and returns the resulting polynomial in `n`: the coefficient of `n^(m-k)`
/// is `C(m, k) seq[k]`.
pub fn bivariate_downgrade_polynomial(m: usize, seq: &IndexedSequence) -> Result<Polynomial, UmbralError> {
    if seq.len() < m + 1 {
        return Err(UmbralError::SequenceTooShort { needed: m + 1, available: seq.len() });
    }
    let mut coeffs = alloc::vec![ExactRational::zero(); m + 1];
    for (k, a) in seq.values().iter().take(m + 1).enumerate() {
        coeffs[m - k] = int(binomial(m as u64, k as i64)) * a;
    }
    Ok(Polynomial::from_coefficients(coeffs))
}
