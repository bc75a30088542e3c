//! Executable identity checks over a reference Bernoulli prefix.
//!
//! Each check returns the first index at which it breaks. The suites take the
//! reference numbers as an argument, so a corrupted prefix shows up as a
//! failure instead of being silently recomputed.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, canonical, frac, int, zero_pow_rational, ExactRational};
use crate::generators::{convert_convention, BernoulliSequence, Convention};
use crate::poly::Polynomial;
use crate::powersum::{
    bernoulli_polynomial, build_closed_form_with, build_integral_form, parity_decompose, pascal_chain,
    prouhet_chain, BuildMethod, PowerSumPolynomial,
};
use crate::umbral::{
    bivariate_downgrade_polynomial, downgrade, falling_binomial, shift_power, IndexedSequence,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: &'static str,
    pub index: usize,
    pub detail: String,
}

impl core::fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} fails at index {}: {}", self.identity, self.index, self.detail)
    }
}

pub type IdentityResult = Result<(), IdentityFailure>;

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCase {
    pub name: &'static str,
    pub result: IdentityResult,
}

fn fail(identity: &'static str, index: usize, detail: String) -> IdentityResult {
    Err(IdentityFailure { identity, index, detail })
}

fn expect_eq(identity: &'static str, index: usize, expected: &ExactRational, actual: &ExactRational) -> IdentityResult {
    if expected == actual {
        Ok(())
    } else {
        fail(identity, index, format!("expected {}, got {}", canonical(expected), canonical(actual)))
    }
}

fn expect_zero_poly(identity: &'static str, index: usize, residual: &Polynomial) -> IdentityResult {
    match residual.degree() {
        None => Ok(()),
        Some(_) => {
            let first = residual.coefficients().iter().position(|c| !c.is_zero()).unwrap_or(0);
            fail(
                identity,
                index,
                format!("residual coefficient of degree {first} is {}", canonical(&residual.coefficient(first))),
            )
        }
    }
}

fn x_power(k: usize) -> Polynomial {
    Polynomial::monomial(ExactRational::one(), k)
}

fn sign(p: usize) -> ExactRational {
    if p % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Power sums `0..=max_p` in both conventions, built from a reference prefix.
struct Tables {
    minus: BernoulliSequence,
    plus: BernoulliSequence,
    s: Vec<PowerSumPolynomial>,
    t: Vec<PowerSumPolynomial>,
}

impl Tables {
    fn new(minus: &BernoulliSequence, max_p: usize) -> Result<Self, IdentityFailure> {
        let minus = minus.truncated(max_p + 1);
        if minus.convention != Convention::Minus {
            return Err(IdentityFailure {
                identity: "reference",
                index: 0,
                detail: String::from("reference prefix must use the minus convention"),
            });
        }
        let plus = convert_convention(&minus);
        let build = |seq: &BernoulliSequence| -> Result<Vec<PowerSumPolynomial>, IdentityFailure> {
            (0..=max_p)
                .map(|p| {
                    build_closed_form_with(p, seq).map_err(|e| IdentityFailure {
                        identity: "closed-form",
                        index: p,
                        detail: format!("{e}"),
                    })
                })
                .collect()
        };
        let s = build(&minus)?;
        let t = build(&plus)?;
        Ok(Self { minus, plus, s, t })
    }
}

/// Polynomial identities of both power-sum tables for `p <= max_p`.
///
/// `minus` must reach index `max_p + 1`.
pub fn powersum_suite(minus: &BernoulliSequence, max_p: usize) -> Vec<IdentityCase> {
    let tables = match Tables::new(minus, max_p) {
        Ok(t) => t,
        Err(e) => return alloc::vec![IdentityCase { name: e.identity, result: Err(e) }],
    };
    let checks: [(&'static str, fn(&Tables, usize) -> IdentityResult); 17] = [
        ("pascal-recurrence", check_pascal_recurrence),
        ("first-polynomials", check_first_polynomials),
        ("degree", check_degree),
        ("n-recurrence", check_n_recurrence),
        ("special-values", check_special_values),
        ("linear-coefficient", check_linear_coefficient),
        ("first-numbers", check_first_numbers),
        ("method-agreement", check_method_agreement),
        ("odd-vanishing", check_odd_vanishing),
        ("parity", check_parity),
        ("derivative", check_derivative),
        ("plus-minus-bridge", check_bridge),
        ("divisibility", check_divisibility),
        ("reflection", check_reflection),
        ("integrality", check_integrality),
        ("prouhet-fit", check_prouhet_fit),
        ("plus-linear-recurrence", check_plus_linear_recurrence),
    ];
    checks.iter().map(|(name, f)| IdentityCase { name, result: f(&tables, max_p) }).collect()
}

fn check_pascal_recurrence(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "pascal-recurrence";
    for p in 0..=max_p {
        let mut lhs = Polynomial::zero();
        for k in 0..=p {
            lhs = &lhs + &t.s[k].polynomial().scale(&int(binomial(p as u64 + 1, k as i64)));
        }
        expect_zero_poly(ID, p, &(&lhs - &x_power(p + 1)))?;
    }
    Ok(())
}

fn check_first_polynomials(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "first-polynomials";
    let n = x_power(1);
    expect_zero_poly(ID, 0, &(t.s[0].polynomial() - &n))?;
    expect_zero_poly(ID, 0, &(t.t[0].polynomial() - &n))?;
    if max_p >= 1 {
        let half = frac(1, 2);
        let s1 = (&n * &Polynomial::linear(int(-1))).scale(&half);
        let t1 = (&n * &Polynomial::linear(int(1))).scale(&half);
        expect_zero_poly(ID, 1, &(t.s[1].polynomial() - &s1))?;
        expect_zero_poly(ID, 1, &(t.t[1].polynomial() - &t1))?;
    }
    Ok(())
}

fn check_degree(t: &Tables, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        for poly in [&t.s[p], &t.t[p]] {
            if poly.polynomial().degree() != Some(p + 1) {
                return fail("degree", p, format!("degree {:?}", poly.polynomial().degree()));
            }
        }
    }
    Ok(())
}

fn check_n_recurrence(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "n-recurrence";
    for p in 0..=max_p {
        let s = t.s[p].polynomial();
        expect_zero_poly(ID, p, &(&(&s.shift(&int(1)) - s) - &x_power(p)))?;
        let tp = t.t[p].polynomial();
        let next_power = x_power(p).shift(&int(1));
        expect_zero_poly(ID, p, &(&(&tp.shift(&int(1)) - tp) - &next_power))?;
    }
    Ok(())
}

fn check_special_values(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "special-values";
    let (one, zero, minus_one) = (BigInt::one(), BigInt::zero(), BigInt::from(-1));
    for p in 0..=max_p {
        let s = &t.s[p];
        expect_eq(ID, p, &zero_pow_rational(p), &s.evaluate(&one))?;
        expect_eq(ID, p, &int(0), &s.evaluate(&zero))?;
        expect_eq(ID, p, &sign(p + 1), &s.evaluate(&minus_one))?;
        let tp = &t.t[p];
        expect_eq(ID, p, &int(1), &tp.evaluate(&one))?;
        expect_eq(ID, p, &int(0), &tp.evaluate(&zero))?;
        expect_eq(ID, p, &-zero_pow_rational(p), &tp.evaluate(&minus_one))?;
    }
    Ok(())
}

fn check_linear_coefficient(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "linear-coefficient";
    for p in 0..=max_p {
        expect_eq(ID, p, &t.minus.values[p], &t.s[p].polynomial().coefficient(1))?;
        expect_eq(ID, p, &t.plus.values[p], &t.t[p].polynomial().coefficient(1))?;
    }
    Ok(())
}

fn check_first_numbers(t: &Tables, _max_p: usize) -> IdentityResult {
    const ID: &str = "first-numbers";
    let minus = [int(1), frac(-1, 2), frac(1, 6), int(0), frac(-1, 30)];
    for (k, expected) in minus.iter().enumerate().take(t.minus.values.len()) {
        expect_eq(ID, k, expected, &t.minus.values[k])?;
        let plus = if k == 1 { -expected } else { expected.clone() };
        expect_eq(ID, k, &plus, &t.plus.values[k])?;
    }
    Ok(())
}

fn check_method_agreement(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "method-agreement";
    for (conv, closed) in [(Convention::Minus, &t.s), (Convention::Plus, &t.t)] {
        let (prouhet, _) = prouhet_chain(max_p, conv);
        let pascal = pascal_chain(max_p);
        for p in 0..=max_p {
            let pascal_p = match conv {
                Convention::Plus if p > 0 => &pascal[p] + &x_power(p),
                _ => pascal[p].clone(),
            };
            let reference = closed[p].polynomial();
            let label = |name: &str| format!("{} disagrees with closed form ({})", name, conv);
            if &pascal_p != reference {
                return fail(ID, p, label(BuildMethod::PascalSystem.name()));
            }
            if prouhet[p].polynomial() != reference {
                return fail(ID, p, label(BuildMethod::ProuhetIntegrate.name()));
            }
            if conv == Convention::Minus && build_integral_form(p).polynomial() != reference {
                return fail(ID, p, label("integral"));
            }
        }
    }
    Ok(())
}

fn check_odd_vanishing(t: &Tables, _max_p: usize) -> IdentityResult {
    for seq in [&t.minus, &t.plus] {
        for (k, v) in seq.values.iter().enumerate().skip(3).step_by(2) {
            expect_eq("odd-vanishing", k, &int(0), v)?;
        }
    }
    Ok(())
}

fn check_parity(t: &Tables, max_p: usize) -> IdentityResult {
    for p in 1..=max_p {
        let report = parity_decompose(&t.s[p]).map_err(|e| IdentityFailure {
            identity: "parity",
            index: p,
            detail: format!("{e}"),
        })?;
        if !report.is_clean() {
            return fail("parity", p, format!("wrong-parity exponents {:?}", report.offending_exponents));
        }
    }
    Ok(())
}

fn check_derivative(t: &Tables, max_p: usize) -> IdentityResult {
    const ID: &str = "derivative";
    for p in 1..=max_p {
        for (table, seq) in [(&t.s, &t.minus), (&t.t, &t.plus)] {
            let lhs = table[p].polynomial().derivative();
            let rhs = &table[p - 1].polynomial().scale(&int(p as u64)) + &Polynomial::constant(seq.values[p].clone());
            expect_zero_poly(ID, p, &(&lhs - &rhs))?;
            // S'_p(n) = (B + n)^p as well
            let umbral = bernoulli_polynomial(p, seq).expect("prefix reaches p");
            expect_zero_poly(ID, p, &(&lhs - &umbral))?;
        }
    }
    Ok(())
}

fn check_bridge(t: &Tables, max_p: usize) -> IdentityResult {
    for p in 1..=max_p {
        let diff = t.t[p].polynomial() - t.s[p].polynomial();
        expect_zero_poly("plus-minus-bridge", p, &(&diff - &x_power(p)))?;
    }
    Ok(())
}

fn check_divisibility(t: &Tables, max_p: usize) -> IdentityResult {
    let divisor = Polynomial::from_coefficients(alloc::vec![int(0), int(1), int(1)]);
    for p in 1..=max_p {
        let (_, rem) = t.t[p].polynomial().div_rem(&divisor).expect("nonzero divisor");
        expect_zero_poly("divisibility", p, &rem)?;
    }
    Ok(())
}

fn check_reflection(t: &Tables, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        let bp = bernoulli_polynomial(p, &t.minus).expect("prefix reaches p");
        // x -> -x, then x -> x - 1, gives B_p(1 - x)
        let reflected = bp.dilate(&int(-1)).shift(&int(-1));
        expect_zero_poly("reflection", p, &(&reflected - &bp.scale(&sign(p))))?;
    }
    Ok(())
}

fn check_integrality(t: &Tables, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        for poly in [&t.s[p], &t.t[p]] {
            for n in -50i64..=50 {
                let v = poly.evaluate(&BigInt::from(n));
                if !v.is_integer() {
                    return fail("integrality", p, format!("value {} at n = {n}", canonical(&v)));
                }
            }
        }
    }
    Ok(())
}

fn check_prouhet_fit(t: &Tables, max_p: usize) -> IdentityResult {
    for seq in [&t.minus, &t.plus] {
        let (_, fitted) = prouhet_chain(max_p, seq.convention);
        for p in 0..=max_p {
            expect_eq("prouhet-fit", p, &seq.values[p], &fitted.values[p])?;
        }
    }
    Ok(())
}

// k = sum_{j<k} C(k, j) 𝓑_j: the plus-convention sum formula at n = 1
fn check_plus_linear_recurrence(t: &Tables, max_p: usize) -> IdentityResult {
    for k in 0..=max_p + 1 {
        let mut acc = ExactRational::zero();
        for j in 0..k {
            acc += int(binomial(k as u64, j as i64)) * &t.plus.values[j];
        }
        expect_eq("plus-linear-recurrence", k, &int(k as u64), &acc)?;
    }
    Ok(())
}

/// Umbral identities for the given ranges.
///
/// `minus` must reach index `recurrence_max + 1`, `binomial_max` and
/// `pascal_max + 1`.
pub fn umbral_suite(
    minus: &BernoulliSequence,
    recurrence_max: usize,
    binomial_max: usize,
    pascal_max: usize,
) -> Vec<IdentityCase> {
    let needed = (recurrence_max + 1).max(binomial_max).max(pascal_max + 1);
    if minus.values.len() <= needed || minus.convention != Convention::Minus {
        let e = IdentityFailure {
            identity: "reference",
            index: needed,
            detail: format!("minus-convention prefix reaching index {needed} required"),
        };
        return alloc::vec![IdentityCase { name: "reference", result: Err(e) }];
    }
    let b = IndexedSequence::new(minus.values.clone()).expect("nonempty");
    let plus = IndexedSequence::new(convert_convention(minus).values).expect("nonempty");
    alloc::vec![
        IdentityCase { name: "shift-recurrence", result: check_shift_recurrence(&b, recurrence_max) },
        IdentityCase { name: "shift-reflection", result: check_shift_reflection(&b, recurrence_max) },
        IdentityCase { name: "blissard-binomial-falling", result: check_binomial_falling(&b, binomial_max) },
        IdentityCase { name: "blissard-binomial-rising", result: check_binomial_rising(&b, binomial_max) },
        IdentityCase { name: "plus-binomial-recurrence", result: check_plus_binomial(&plus, binomial_max) },
        IdentityCase { name: "plus-pascal", result: check_plus_pascal(minus, pascal_max) },
        IdentityCase { name: "derivative-consistency", result: check_derivative_consistency(&b, recurrence_max) },
    ]
}

fn check_shift_recurrence(b: &IndexedSequence, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        let value = downgrade(&shift_power(&int(1), p + 1), b).expect("length checked") - &b.values()[p + 1];
        expect_eq("shift-recurrence", p, &zero_pow_rational(p), &value)?;
    }
    Ok(())
}

fn check_shift_reflection(b: &IndexedSequence, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        let value = downgrade(&shift_power(&int(1), p), b).expect("length checked");
        expect_eq("shift-reflection", p, &(sign(p) * &b.values()[p]), &value)?;
    }
    Ok(())
}

fn check_binomial_falling(b: &IndexedSequence, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        let value = downgrade(&falling_binomial(&int(0), p), b).expect("length checked");
        expect_eq("blissard-binomial-falling", p, &(sign(p) / int(p as u64 + 1)), &value)?;
    }
    Ok(())
}

fn check_binomial_rising(b: &IndexedSequence, max_p: usize) -> IdentityResult {
    for p in 1..=max_p {
        let value = downgrade(&falling_binomial(&int(p as u64 - 1), p), b).expect("length checked");
        let expected = ExactRational::new(BigInt::from(-1), BigInt::from(p * (p + 1)));
        expect_eq("blissard-binomial-rising", p, &expected, &value)?;
    }
    Ok(())
}

fn check_plus_binomial(plus: &IndexedSequence, max_p: usize) -> IdentityResult {
    for p in 0..=max_p {
        let value = downgrade(&falling_binomial(&int(-1), p), plus).expect("length checked");
        expect_eq("plus-binomial-recurrence", p, &(sign(p) / int(p as u64 + 1)), &value)?;
    }
    Ok(())
}

/// Expands `binom(x - 1, p)` in `x`, substitutes `x^k -> T_k(n)` and compares
/// with `binom(n, p + 1)`.
fn check_plus_pascal(minus: &BernoulliSequence, max_p: usize) -> IdentityResult {
    const ID: &str = "plus-pascal";
    let plus = convert_convention(&minus.truncated(max_p + 1));
    let t: Vec<Polynomial> = (0..=max_p)
        .map(|k| build_closed_form_with(k, &plus).expect("prefix reaches k + 1").polynomial().clone())
        .collect();
    for p in 0..=max_p {
        let expansion = falling_binomial(&int(-1), p);
        let mut lhs = Polynomial::zero();
        for (k, c) in expansion.coefficients().iter().enumerate() {
            lhs = &lhs + &t[k].scale(c);
        }
        let rhs = binomial_polynomial(p + 1);
        expect_zero_poly(ID, p, &(&lhs - &rhs))?;
    }
    Ok(())
}

/// `binom(n, k) = n (n-1) ... (n-k+1) / k!` as a polynomial in `n`.
fn binomial_polynomial(k: usize) -> Polynomial {
    falling_binomial(&int(0), k).as_polynomial().clone()
}

fn check_derivative_consistency(b: &IndexedSequence, max_m: usize) -> IdentityResult {
    for m in 1..=max_m {
        let lhs = bivariate_downgrade_polynomial(m, b).expect("length checked").derivative();
        let rhs = bivariate_downgrade_polynomial(m - 1, b).expect("length checked").scale(&int(m as u64));
        expect_zero_poly("derivative-consistency", m, &(&lhs - &rhs))?;
    }
    Ok(())
}

/// First failure of a suite, if any.
pub fn first_failure(cases: &[IdentityCase]) -> Option<&IdentityFailure> {
    cases.iter().find_map(|c| c.result.as_ref().err())
}
