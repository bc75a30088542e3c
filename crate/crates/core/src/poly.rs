//! Dense univariate polynomials over [`ExactRational`].

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, int, ExactRational};

/// Coefficient vector, index `j` holding the coefficient of `x^j`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by the zero polynomial")]
pub struct DivisionByZero;

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_coefficients(alloc::vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: ExactRational, degree: usize) -> Self {
        let mut coeffs = alloc::vec![ExactRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coefficients(coeffs)
    }

    /// `x + c`
    pub fn linear(c: ExactRational) -> Self {
        Self::from_coefficients(alloc::vec![c, ExactRational::one()])
    }

    pub fn from_coefficients(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<ExactRational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self::from_coefficients(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn evaluate(&self, x: &ExactRational) -> ExactRational {
        self.coeffs.iter().rev().fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_integer(&self, x: &BigInt) -> ExactRational {
        self.evaluate(&ExactRational::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coefficients(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * int(k as u64)).collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactRational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, c)| c / int(k as u64 + 1)));
        Self::from_coefficients(coeffs)
    }

    /// `p(x + c)`, expanded.
    pub fn shift(&self, c: &ExactRational) -> Self {
        let mut out = alloc::vec![ExactRational::zero(); self.coeffs.len()];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut c_pow = ExactRational::one();
            for j in (0..=k).rev() {
                out[j] += a * int(binomial(k as u64, j as i64)) * &c_pow;
                c_pow *= c;
            }
        }
        Self::from_coefficients(out)
    }

    /// `p(c * x)`
    pub fn dilate(&self, c: &ExactRational) -> Self {
        let mut c_pow = ExactRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &c_pow);
            c_pow *= c;
        }
        Self::from_coefficients(coeffs)
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), DivisionByZero> {
        let d_deg = divisor.degree().ok_or(DivisionByZero)?;
        let lead = divisor.coeffs[d_deg].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = alloc::vec![ExactRational::zero(); rem.len() - d_deg];
        for shift in (0..quot.len()).rev() {
            let q = &rem[shift + d_deg] / &lead;
            if q.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &q * d;
            }
            quot[shift] = q;
        }
        Ok((Self::from_coefficients(quot), Self::from_coefficients(rem)))
    }

    /// Rising product `(x + a)(x + a + 1)...(x + a + k - 1)`.
    pub fn rising(a: &ExactRational, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, i| &acc * &Self::linear(a + int(i as u64)))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coefficients((0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coefficients((0..n).map(|k| self.coefficient(k) - rhs.coefficient(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = alloc::vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coefficients(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);
