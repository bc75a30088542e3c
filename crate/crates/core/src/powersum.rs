//! Power-sum polynomials.
//!
//! `S_p(n) = 0^p + 1^p + ... + (n-1)^p` (with `0^0 = 1`) under
//! [`Convention::Minus`] and `T_p(n) = 1^p + ... + n^p` under
//! [`Convention::Plus`], both as exact polynomials of degree `p + 1` in `n`.
//! Evaluation is allowed at any integer, negative ones included.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{binomial, int, ExactRational};
use crate::generators::{gen_de_moivre, BernoulliSequence, Convention, Method};
use crate::poly::Polynomial;
use crate::umbral::{bivariate_downgrade_polynomial, IndexedSequence};

/// The three ways of constructing a power-sum polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuildMethod {
    /// `[(B + n)^(p+1) - B_(p+1)] / (p + 1)`
    ClosedForm,
    /// Forward substitution in `sum_{k<=p} C(p+1, k) S_k(n) = n^(p+1)`.
    PascalSystem,
    /// Integrate `p S_(p-1)` and fit the linear coefficient.
    ProuhetIntegrate,
}

impl BuildMethod {
    pub const ALL: [BuildMethod; 3] =
        [BuildMethod::ClosedForm, BuildMethod::PascalSystem, BuildMethod::ProuhetIntegrate];

    pub fn name(self) -> &'static str {
        match self {
            BuildMethod::ClosedForm => "closed-form",
            BuildMethod::PascalSystem => "pascal",
            BuildMethod::ProuhetIntegrate => "prouhet",
        }
    }

    pub fn build(self, p: usize, conv: Convention) -> PowerSumPolynomial {
        match self {
            BuildMethod::ClosedForm => build_closed_form(p, conv),
            BuildMethod::PascalSystem => build_pascal(p, conv),
            BuildMethod::ProuhetIntegrate => build_prouhet(p, conv),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PowerSumError {
    #[error("power-sum polynomial for p = {power} must have degree {expected}, found {found:?}")]
    Degree { power: usize, expected: usize, found: Option<usize> },
    #[error("power-sum polynomial for p = {power} has leading coefficient {found}, expected 1/{}", power + 1)]
    Leading { power: usize, found: ExactRational },
    #[error("power-sum polynomial has nonzero constant term {0}")]
    ConstantTerm(ExactRational),
    #[error("the parity property is stated for p > 0 only")]
    ParityPowerZero,
    #[error("the parity property is stated for the minus convention only")]
    ParityConvention,
    #[error("Bernoulli prefix reaches index {available}, index {needed} required")]
    PrefixTooShort { needed: usize, available: usize },
}

/// `S_p` or `T_p` in the variable `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSumPolynomial {
    power: usize,
    convention: Convention,
    poly: Polynomial,
}

impl PowerSumPolynomial {
    /// Checks degree `p + 1`, leading coefficient `1/(p+1)` and zero constant term.
    pub fn new(power: usize, convention: Convention, poly: Polynomial) -> Result<Self, PowerSumError> {
        if poly.degree() != Some(power + 1) {
            return Err(PowerSumError::Degree { power, expected: power + 1, found: poly.degree() });
        }
        let leading = poly.coefficient(power + 1);
        if leading != ExactRational::new(BigInt::one(), BigInt::from(power + 1)) {
            return Err(PowerSumError::Leading { power, found: leading });
        }
        let constant = poly.coefficient(0);
        if !constant.is_zero() {
            return Err(PowerSumError::ConstantTerm(constant));
        }
        Ok(Self { power, convention, poly })
    }

    fn checked(power: usize, convention: Convention, poly: Polynomial) -> Self {
        Self::new(power, convention, poly).expect("power-sum construction preserves its invariants")
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    /// Coefficient of `n^j` for `j = 0..=p+1`.
    pub fn coefficients(&self) -> &[ExactRational] {
        self.poly.coefficients()
    }

    pub fn evaluate(&self, n: &BigInt) -> ExactRational {
        evaluate(self, n)
    }

    /// Human form, highest power first: `n^4/4 - n^3/2 + n^2/4`.
    pub fn human_form(&self) -> String {
        human_form(&self.poly, "n")
    }
}

impl fmt::Display for PowerSumPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.human_form())
    }
}

/// Writes a polynomial as `a*x^k/b` terms from the top degree down.
pub fn human_form(poly: &Polynomial, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in poly.coefficients().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let numer = c.numer().abs();
        let denom = c.denom();
        let monomial = match k {
            0 => String::new(),
            1 => String::from(var),
            _ => alloc::format!("{var}^{k}"),
        };
        if monomial.is_empty() {
            let _ = write!(out, "{numer}");
        } else if numer.is_one() {
            out.push_str(&monomial);
        } else {
            let _ = write!(out, "{numer}*{monomial}");
        }
        if !denom.is_one() {
            let _ = write!(out, "/{denom}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn prefix_as_sequence(prefix: &BernoulliSequence, needed: usize) -> Result<IndexedSequence, PowerSumError> {
    if prefix.values.len() <= needed {
        return Err(PowerSumError::PrefixTooShort { needed, available: prefix.upto() });
    }
    Ok(IndexedSequence::new(prefix.values[..=needed].to_vec()).expect("prefix is nonempty"))
}

/// Closed form from a supplied Bernoulli prefix (which must reach `p + 1`).
pub fn build_closed_form_with(p: usize, prefix: &BernoulliSequence) -> Result<PowerSumPolynomial, PowerSumError> {
    let seq = prefix_as_sequence(prefix, p + 1)?;
    let expanded = bivariate_downgrade_polynomial(p + 1, &seq).expect("sequence length checked");
    // (B + n)^(p+1) - B_(p+1): the constant term of the expansion is exactly B_(p+1)
    let mut coeffs = expanded.into_coefficients();
    coeffs[0] = ExactRational::zero();
    let poly = Polynomial::from_coefficients(coeffs).scale(&ExactRational::new(BigInt::one(), BigInt::from(p + 1)));
    PowerSumPolynomial::new(p, prefix.convention, poly)
}

/// `S_p(n) = [sum_{k<=p} C(p+1, k) B_k n^(p+1-k)] / (p + 1)`, or `T_p` with
/// the Plus numbers.
pub fn build_closed_form(p: usize, conv: Convention) -> PowerSumPolynomial {
    build_closed_form_with(p, &gen_de_moivre(p + 1, conv)).expect("prefix reaches p + 1")
}

/// All of `S_0..=S_p` from Pascal's triangular system.
pub fn pascal_chain(p: usize) -> Vec<Polynomial> {
    let mut chain: Vec<Polynomial> = Vec::with_capacity(p + 1);
    for k in 0..=p {
        let mut rhs = Polynomial::monomial(ExactRational::one(), k + 1);
        for (j, s) in chain.iter().enumerate() {
            rhs = &rhs - &s.scale(&int(binomial(k as u64 + 1, j as i64)));
        }
        chain.push(rhs.scale(&ExactRational::new(BigInt::one(), BigInt::from(k + 1))));
    }
    chain
}

/// Pascal's recurrence for `S_p`; `T_p = S_p + n^p` for `p > 0`.
pub fn build_pascal(p: usize, conv: Convention) -> PowerSumPolynomial {
    let s = pascal_chain(p).pop().expect("chain is nonempty");
    let poly = match conv {
        Convention::Plus if p > 0 => &s + &Polynomial::monomial(ExactRational::one(), p),
        _ => s,
    };
    PowerSumPolynomial::checked(p, conv, poly)
}

/// Builds `S_0..=S_p` (or `T_0..=T_p`) by repeated integration and returns the
/// fitted linear coefficients as a Bernoulli prefix.
///
/// From `S_0(n) = n`, each step adds `B_k n` to the antiderivative of
/// `k S_(k-1)`, choosing `B_k` so that `S_k(1) = 0` (or `T_k(1) = 1`).
pub fn prouhet_chain(p: usize, conv: Convention) -> (Vec<PowerSumPolynomial>, BernoulliSequence) {
    let target_at_one = match conv {
        Convention::Minus => ExactRational::zero(),
        Convention::Plus => ExactRational::one(),
    };
    let mut polys: Vec<PowerSumPolynomial> = Vec::with_capacity(p + 1);
    let mut fitted = Vec::with_capacity(p + 1);
    let mut current = Polynomial::monomial(ExactRational::one(), 1);
    fitted.push(ExactRational::one());
    polys.push(PowerSumPolynomial::checked(0, conv, current.clone()));
    for k in 1..=p {
        let integral = current.scale(&int(k as u64)).antiderivative();
        let linear = &target_at_one - integral.evaluate(&ExactRational::one());
        current = &integral + &Polynomial::monomial(linear.clone(), 1);
        fitted.push(linear);
        polys.push(PowerSumPolynomial::checked(k, conv, current.clone()));
    }
    let seq = BernoulliSequence { convention: conv, values: fitted, method: Method::ProuhetFit };
    (polys, seq)
}

pub fn build_prouhet(p: usize, conv: Convention) -> PowerSumPolynomial {
    prouhet_chain(p, conv).0.pop().expect("chain is nonempty")
}

/// `S_p(n) = integral_0^n (B + x)^p dx` with the Minus numbers.
pub fn build_integral_form(p: usize) -> PowerSumPolynomial {
    let seq = prefix_as_sequence(&gen_de_moivre(p, Convention::Minus), p).expect("prefix reaches p");
    let bernoulli_poly = bivariate_downgrade_polynomial(p, &seq).expect("sequence length checked");
    PowerSumPolynomial::checked(p, Convention::Minus, bernoulli_poly.antiderivative())
}

/// The Bernoulli polynomial `(B + x)^p` for a given prefix.
pub fn bernoulli_polynomial(p: usize, prefix: &BernoulliSequence) -> Result<Polynomial, PowerSumError> {
    let seq = prefix_as_sequence(prefix, p)?;
    Ok(bivariate_downgrade_polynomial(p, &seq).expect("sequence length checked"))
}

/// Horner evaluation at an arbitrary integer.
pub fn evaluate(poly: &PowerSumPolynomial, n: &BigInt) -> ExactRational {
    poly.poly.evaluate_integer(n)
}

/// Literal summation: `sum_{k<n} k^p` (Minus) or `sum_{1<=k<=n} k^p` (Plus).
pub fn brute_force_sum(p: usize, n: u64, conv: Convention) -> ExactRational {
    let range = match conv {
        Convention::Minus => 0..n,
        Convention::Plus => 1..n + 1,
    };
    let total = range.fold(BigInt::zero(), |acc, k| acc + num_traits::pow(BigInt::from(k), p));
    ExactRational::from_integer(total)
}

/// Outcome of the parity check on `S_p(n) + n^p / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub power: usize,
    pub shifted: Polynomial,
    /// `(p + 1) mod 2`; every surviving exponent should have it.
    pub expected_parity: usize,
    /// Exponents with a nonzero coefficient of the wrong parity.
    pub offending_exponents: Vec<usize>,
}

impl ParityReport {
    pub fn is_clean(&self) -> bool {
        self.offending_exponents.is_empty()
    }
}

pub fn parity_decompose(poly: &PowerSumPolynomial) -> Result<ParityReport, PowerSumError> {
    if poly.power == 0 {
        return Err(PowerSumError::ParityPowerZero);
    }
    if poly.convention != Convention::Minus {
        return Err(PowerSumError::ParityConvention);
    }
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let shifted = &poly.poly + &Polynomial::monomial(half, poly.power);
    let expected_parity = (poly.power + 1) % 2;
    let offending_exponents = shifted
        .coefficients()
        .iter()
        .enumerate()
        .filter(|(k, c)| !c.is_zero() && k % 2 != expected_parity)
        .map(|(k, _)| k)
        .collect();
    Ok(ParityReport { power: poly.power, shifted, expected_parity, offending_exponents })
}
