//! Bernoulli number prefixes from independent exact definitions.
//!
//! Every generator returns a full prefix `B_0..=B_N` (odd entries past index 1
//! are stored as explicit zeros). All of them agree, which is what the
//! verification harness checks; [`gen_de_moivre`] is the reference route and
//! the one [`BernoulliCache`] memoizes.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{
    binomial, factorial, frac, hessenberg_leading_minors, int, invert_unit_lower_triangular,
    zero_pow_rational, ExactRational, LowerTriangularMatrix,
};
use crate::poly::Polynomial;
use crate::umbral::falling_binomial;

/// Sign convention for index 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// `B_1 = -1/2`; power sums start at `0^p` and stop at `(n-1)^p`.
    Minus,
    /// `B_1 = +1/2`; power sums run over `1^p..=n^p`.
    Plus,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Minus => "minus",
            Convention::Plus => "plus",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Convention::Minus => Convention::Plus,
            Convention::Plus => Convention::Minus,
        }
    }

    /// `B_1` in this convention.
    pub fn b1(self) -> ExactRational {
        match self {
            Convention::Minus => frac(-1, 2),
            Convention::Plus => frac(1, 2),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which procedure produced a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    DeMoivre,
    DeMoivreEven,
    EulerConvolution,
    Genocchi,
    BlissardDifference,
    MatrixInverse,
    EgfReciprocal,
    DeterminantHammond,
    DeterminantFactorial,
    /// Linear coefficients fitted while integrating power sums upward.
    ProuhetFit,
}

impl Method {
    pub const GENERATORS: [Method; 9] = [
        Method::DeMoivre,
        Method::DeMoivreEven,
        Method::EulerConvolution,
        Method::Genocchi,
        Method::BlissardDifference,
        Method::MatrixInverse,
        Method::EgfReciprocal,
        Method::DeterminantHammond,
        Method::DeterminantFactorial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::DeMoivre => "de-moivre",
            Method::DeMoivreEven => "de-moivre-even",
            Method::EulerConvolution => "euler-conv",
            Method::Genocchi => "genocchi",
            Method::BlissardDifference => "blissard-diff",
            Method::MatrixInverse => "matrix-inv",
            Method::EgfReciprocal => "egf",
            Method::DeterminantHammond => "det-hammond",
            Method::DeterminantFactorial => "det-factorial",
            Method::ProuhetFit => "prouhet-fit",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Method::GENERATORS
            .into_iter()
            .chain([Method::ProuhetFit])
            .find(|m| m.name() == name)
    }

    /// Produces `B_0..=B_upto` under `conv` with this method. Methods whose
    /// definition is stated for `B_1 = -1/2` are converted afterwards.
    pub fn generate(self, upto: usize, conv: Convention) -> BernoulliSequence {
        let seq = match self {
            Method::DeMoivre => return gen_de_moivre(upto, conv),
            Method::EgfReciprocal => return gen_egf_reciprocal(upto, conv),
            Method::DeMoivreEven => BernoulliSequence::from_even_values(
                &gen_de_moivre_even(upto / 2),
                upto,
                Method::DeMoivreEven,
            ),
            Method::EulerConvolution => gen_euler_convolution(upto),
            Method::Genocchi => gen_genocchi(upto, GenocchiParameter::MatchIndex)
                .expect("index-matched Genocchi parameter is always valid"),
            Method::BlissardDifference => gen_blissard_difference(upto),
            Method::MatrixInverse => gen_matrix_inverse(upto),
            Method::DeterminantHammond => gen_determinant(upto, DeterminantVariant::Hammond),
            Method::DeterminantFactorial => gen_determinant(upto, DeterminantVariant::Factorial),
            Method::ProuhetFit => crate::powersum::prouhet_chain(upto, conv).1,
        };
        if seq.convention == conv {
            seq
        } else {
            convert_convention(&seq)
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A prefix `B_0..=B_N` with its convention and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliSequence {
    pub convention: Convention,
    pub values: Vec<ExactRational>,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceViolation {
    #[error("sequence is empty")]
    Empty,
    #[error("B_0 = {0}, expected 1")]
    FirstValue(ExactRational),
    #[error("B_1 = {found} does not match the {convention} convention")]
    SecondValue { convention: Convention, found: ExactRational },
    #[error("B_{index} = {found}, expected 0")]
    OddNonzero { index: usize, found: ExactRational },
    #[error("B_{index} = {found} has the wrong sign")]
    SignAlternation { index: usize, found: ExactRational },
}

/// First index at which two sequences differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    /// `None` when one sequence ends before the other.
    pub left: Option<ExactRational>,
    pub right: Option<ExactRational>,
}

impl BernoulliSequence {
    /// Validates the structural invariants before accepting `values`.
    pub fn from_values(
        convention: Convention,
        values: Vec<ExactRational>,
        method: Method,
    ) -> Result<Self, SequenceViolation> {
        let seq = Self { convention, values, method };
        seq.check_invariants()?;
        Ok(seq)
    }

    /// Rebuilds a full prefix (Minus convention) from `[B_2, B_4, ...]`.
    pub fn from_even_values(evens: &[ExactRational], upto: usize, method: Method) -> Self {
        let values = (0..=upto)
            .map(|k| match k {
                0 => ExactRational::one(),
                1 => frac(-1, 2),
                k if k % 2 == 1 => ExactRational::zero(),
                k => evens[k / 2 - 1].clone(),
            })
            .collect();
        Self { convention: Convention::Minus, values, method }
    }

    pub fn upto(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, k: usize) -> Option<&ExactRational> {
        self.values.get(k)
    }

    pub fn truncated(&self, upto: usize) -> Self {
        Self {
            convention: self.convention,
            values: self.values.iter().take(upto + 1).cloned().collect(),
            method: self.method,
        }
    }

    /// Checks `B_0 = 1`, `B_1 = -+1/2`, vanishing odd entries and the sign
    /// pattern `(-1)^(k-1) B_2k > 0`.
    pub fn check_invariants(&self) -> Result<(), SequenceViolation> {
        let first = self.values.first().ok_or(SequenceViolation::Empty)?;
        if !first.is_one() {
            return Err(SequenceViolation::FirstValue(first.clone()));
        }
        if let Some(b1) = self.values.get(1) {
            if *b1 != self.convention.b1() {
                return Err(SequenceViolation::SecondValue {
                    convention: self.convention,
                    found: b1.clone(),
                });
            }
        }
        for (index, v) in self.values.iter().enumerate().skip(2) {
            if index % 2 == 1 {
                if !v.is_zero() {
                    return Err(SequenceViolation::OddNonzero { index, found: v.clone() });
                }
            } else {
                let positive_expected = (index / 2) % 2 == 1;
                if v.is_zero() || v.is_positive() != positive_expected {
                    return Err(SequenceViolation::SignAlternation { index, found: v.clone() });
                }
            }
        }
        Ok(())
    }

    /// Compares value by value over the common prefix, then lengths.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch> {
        let common = self.values.len().min(other.values.len());
        if let Some(index) = (0..common).find(|&k| self.values[k] != other.values[k]) {
            return Some(Mismatch {
                index,
                left: Some(self.values[index].clone()),
                right: Some(other.values[index].clone()),
            });
        }
        (self.values.len() != other.values.len()).then(|| Mismatch {
            index: common,
            left: self.values.get(common).cloned(),
            right: other.values.get(common).cloned(),
        })
    }
}

/// `𝓑_p = (-1)^p B_p`: flips odd indices and toggles the tag.
pub fn convert_convention(s: &BernoulliSequence) -> BernoulliSequence {
    BernoulliSequence {
        convention: s.convention.flipped(),
        values: s
            .values
            .iter()
            .enumerate()
            .map(|(k, v)| if k % 2 == 1 { -v } else { v.clone() })
            .collect(),
        method: s.method,
    }
}

fn extend_de_moivre(values: &mut Vec<ExactRational>, upto: usize, conv: Convention) {
    match conv {
        Convention::Minus => {
            // sum_{k<=p} C(p+1, k) B_k = 0^p, solved for B_p
            for p in values.len()..=upto {
                let mut acc = zero_pow_rational(p);
                for (k, b) in values.iter().enumerate() {
                    if !b.is_zero() {
                        acc -= int(binomial(p as u64 + 1, k as i64)) * b;
                    }
                }
                values.push(acc / int(p as u64 + 1));
            }
        }
        Convention::Plus => {
            // downgrade binom(𝓑 - 1, p) = (-1)^p / (p + 1); leading coefficient 1/p!
            let minus_one = int(-1);
            for p in values.len()..=upto {
                let poly = falling_binomial(&minus_one, p);
                let sign = if p % 2 == 0 { 1 } else { -1 };
                let mut acc = frac(sign, p as i64 + 1);
                for (k, b) in values.iter().enumerate() {
                    acc -= &poly.coefficients()[k] * b;
                }
                values.push(acc * int(factorial(p as u64)));
            }
        }
    }
}

/// Forward recurrence `(B + 1)^(p+1) - B_(p+1) = 0^p` (Minus), or its Plus
/// analogue `binom(𝓑 - 1, p) = (-1)^p / (p + 1)`.
pub fn gen_de_moivre(upto: usize, conv: Convention) -> BernoulliSequence {
    let mut values = Vec::with_capacity(upto + 1);
    extend_de_moivre(&mut values, upto, conv);
    BernoulliSequence { convention: conv, values, method: Method::DeMoivre }
}

/// Even-index values `[B_2, B_4, ..., B_2M]` from
/// `C(2m+1,1) B_2m + C(2m+1,3) B_(2m-2) + ... + C(2m+1,2m-1) B_2 = (2m-1)/2`.
pub fn gen_de_moivre_even(m_max: usize) -> Vec<ExactRational> {
    let mut evens: Vec<ExactRational> = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let top = 2 * m as u64 + 1;
        let mut acc = frac(2 * m as i64 - 1, 2);
        // term i pairs C(2m+1, 2i-1) with B_(2m-2i+2) = evens[m - i]
        for i in 2..=m {
            acc -= int(binomial(top, 2 * i as i64 - 1)) * &evens[m - i];
        }
        evens.push(acc / int(top));
    }
    evens
}

/// `(2n + 1) B_2n = -sum_{k=1}^{n-1} C(2n, 2k) B_2k B_(2n-2k)` for `n > 1`.
pub fn gen_euler_convolution(upto: usize) -> BernoulliSequence {
    let seeds = [ExactRational::one(), frac(-1, 2), frac(1, 6)];
    let mut values: Vec<ExactRational> = seeds.into_iter().take(upto + 1).collect();
    for idx in values.len()..=upto {
        if idx % 2 == 1 {
            values.push(ExactRational::zero());
            continue;
        }
        let n = idx / 2;
        let mut acc = ExactRational::zero();
        for k in 1..n {
            acc += int(binomial(idx as u64, 2 * k as i64)) * &values[2 * k] * &values[idx - 2 * k];
        }
        values.push(-acc / int(idx as u64 + 1));
    }
    BernoulliSequence { convention: Convention::Minus, values, method: Method::EulerConvolution }
}

/// Free parameter `m >= n` of the Genocchi sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenocchiParameter {
    /// `m = n` for every index.
    MatchIndex,
    /// A single `m`, which must be at least the largest index requested.
    Fixed(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("Genocchi parameter m = {m} is smaller than the index n = {n}")]
pub struct GenocchiRangeError {
    pub m: usize,
    pub n: usize,
}

/// `B_n` alone from `2^m (2^n - 1) B_n = n sum_{k=2}^m C(m,k) sum_{j=1}^{k-1} (-1)^(j-1) j^(n-1)`,
/// valid for `m >= n > 1`.
pub fn genocchi_value(n: usize, m: usize) -> Result<ExactRational, GenocchiRangeError> {
    if m < n || n < 2 {
        return Err(GenocchiRangeError { m, n });
    }
    let mut total = BigInt::zero();
    let mut alternating = BigInt::zero();
    for k in 2..=m {
        // extend the inner alternating sum by its j = k - 1 term
        let j = k - 1;
        let term = num_traits::pow(BigInt::from(j), n - 1);
        if j % 2 == 1 {
            alternating += term;
        } else {
            alternating -= term;
        }
        total += binomial(m as u64, k as i64) * &alternating;
    }
    let denom = (BigInt::one() << m) * ((BigInt::one() << n) - 1);
    Ok(ExactRational::new(total * n, denom))
}

pub fn gen_genocchi(upto: usize, m: GenocchiParameter) -> Result<BernoulliSequence, GenocchiRangeError> {
    let mut values: Vec<ExactRational> = [ExactRational::one(), frac(-1, 2)].into_iter().take(upto + 1).collect();
    for n in 2..=upto {
        let m = match m {
            GenocchiParameter::MatchIndex => n,
            GenocchiParameter::Fixed(m) => m,
        };
        values.push(genocchi_value(n, m)?);
    }
    Ok(BernoulliSequence { convention: Convention::Minus, values, method: Method::Genocchi })
}

/// `(-1)^n B_n = sum_{k=0}^n [sum_{j=0}^k (-1)^j C(k,j) (j+1)^n] / (k+1)`.
pub fn gen_blissard_difference(upto: usize) -> BernoulliSequence {
    let values = (0..=upto)
        .map(|n| {
            let mut outer = ExactRational::zero();
            for k in 0..=n {
                let mut inner = BigInt::zero();
                for j in 0..=k {
                    let term = binomial(k as u64, j as i64) * num_traits::pow(BigInt::from(j + 1), n);
                    if j % 2 == 0 {
                        inner += term;
                    } else {
                        inner -= term;
                    }
                }
                outer += ExactRational::new(inner, BigInt::from(k + 1));
            }
            if n % 2 == 1 {
                -outer
            } else {
                outer
            }
        })
        .collect();
    BernoulliSequence { convention: Convention::Minus, values, method: Method::BlissardDifference }
}

/// Inverts `[1/(i-j+1)!]_{j<=i}`; the inverse holds `B_(i-j)/(i-j)!`.
pub fn gen_matrix_inverse(upto: usize) -> BernoulliSequence {
    let dim = upto + 1;
    let m = LowerTriangularMatrix::from_fn(dim, 0, |r, c| {
        ExactRational::new(BigInt::one(), factorial((r - c + 1) as u64))
    })
    .expect("dimension is positive");
    let inv = invert_unit_lower_triangular(&m).expect("unit diagonal");
    let values = (0..dim).map(|k| inv.get(k, 0) * int(factorial(k as u64))).collect();
    BernoulliSequence { convention: Convention::Minus, values, method: Method::MatrixInverse }
}

/// Reciprocal of the series `(e^x - 1)/x = sum x^k/(k+1)!`, times `e^x` for
/// the Plus convention; `B_k = k! [x^k]`.
pub fn gen_egf_reciprocal(upto: usize, conv: Convention) -> BernoulliSequence {
    let inv_fact: Vec<ExactRational> =
        (0..=upto as u64 + 1).map(|k| ExactRational::new(BigInt::one(), factorial(k))).collect();
    let mut recip: Vec<ExactRational> = Vec::with_capacity(upto + 1);
    recip.push(ExactRational::one());
    for n in 1..=upto {
        let mut acc = ExactRational::zero();
        for k in 1..=n {
            acc -= &inv_fact[k + 1] * &recip[n - k];
        }
        recip.push(acc);
    }
    let series = match conv {
        Convention::Minus => recip,
        Convention::Plus => {
            let exp = Polynomial::from_coefficients(inv_fact[..=upto].to_vec());
            let product = &Polynomial::from_coefficients(recip) * &exp;
            (0..=upto).map(|k| product.coefficient(k)).collect()
        }
    };
    let values = series.into_iter().enumerate().map(|(k, c)| c * int(factorial(k as u64))).collect();
    BernoulliSequence { convention: conv, values, method: Method::EgfReciprocal }
}

/// The two Hessenberg determinant definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeterminantVariant {
    /// Entries `C(i+1, j-1)` (one-based); `(-1)^n B_n = det / (n+1)!`.
    Hammond,
    /// Entries `1/(i-j+2)!` (one-based); `(-1)^n B_n = n! det`.
    Factorial,
}

/// The `dim x dim` lower Hessenberg matrix of a variant, zero-based.
pub fn determinant_matrix(dim: usize, variant: DeterminantVariant) -> LowerTriangularMatrix {
    LowerTriangularMatrix::from_fn(dim, 1, |r, c| match variant {
        DeterminantVariant::Hammond => int(binomial(r as u64 + 2, c as i64)),
        DeterminantVariant::Factorial => {
            ExactRational::new(BigInt::one(), factorial((r + 2 - c) as u64))
        }
    })
    .expect("dimension is positive")
}

/// Every `n <= upto` at once: the `n x n` matrices are leading principal
/// submatrices of the largest one.
pub fn gen_determinant(upto: usize, variant: DeterminantVariant) -> BernoulliSequence {
    let minors = if upto == 0 {
        alloc::vec![ExactRational::one()]
    } else {
        hessenberg_leading_minors(&determinant_matrix(upto, variant))
    };
    let values = minors
        .into_iter()
        .enumerate()
        .map(|(n, det)| {
            let signed = match variant {
                DeterminantVariant::Hammond => det / int(factorial(n as u64 + 1)),
                DeterminantVariant::Factorial => det * int(factorial(n as u64)),
            };
            if n % 2 == 1 {
                -signed
            } else {
                signed
            }
        })
        .collect();
    let method = match variant {
        DeterminantVariant::Hammond => Method::DeterminantHammond,
        DeterminantVariant::Factorial => Method::DeterminantFactorial,
    };
    BernoulliSequence { convention: Convention::Minus, values, method }
}

/// Memoized De Moivre prefixes, one per convention.
///
/// Not synchronized; wrap it in a lock to share it between threads.
#[derive(Debug, Clone, Default)]
pub struct BernoulliCache {
    minus: Vec<ExactRational>,
    plus: Vec<ExactRational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn slot(&mut self, conv: Convention) -> &mut Vec<ExactRational> {
        match conv {
            Convention::Minus => &mut self.minus,
            Convention::Plus => &mut self.plus,
        }
    }

    fn ensure(&mut self, upto: usize, conv: Convention) -> &[ExactRational] {
        let slot = self.slot(conv);
        if slot.len() <= upto {
            extend_de_moivre(slot, upto, conv);
        }
        &slot[..=upto]
    }

    pub fn prefix(&mut self, upto: usize, conv: Convention) -> BernoulliSequence {
        BernoulliSequence { convention: conv, values: self.ensure(upto, conv).to_vec(), method: Method::DeMoivre }
    }

    pub fn value(&mut self, k: usize, conv: Convention) -> ExactRational {
        self.ensure(k, conv)[k].clone()
    }

    /// Number of cached values for a convention.
    pub fn cached_len(&self, conv: Convention) -> usize {
        match conv {
            Convention::Minus => self.minus.len(),
            Convention::Plus => self.plus.len(),
        }
    }

    /// Replaces one cached value, computing the prefix up to `k` first.
    /// Later extensions of the prefix are derived from the replaced value.
    pub fn override_value(&mut self, conv: Convention, k: usize, value: ExactRational) {
        self.ensure(k, conv);
        self.slot(conv)[k] = value;
    }
}
