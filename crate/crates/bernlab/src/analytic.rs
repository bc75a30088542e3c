//! Floating-point checks of integral, series and asymptotic representations
//! of the Bernoulli numbers.
//!
//! Exact inputs come from the shared De Moivre cache; every check returns a
//! [`CheckReport`] instead of failing, so callers decide what to do with a
//! red result.

use std::f64::consts::{LN_2, PI};
use std::num::NonZeroUsize;
use std::sync::OnceLock;

use bernlab_core::exact::{factorial, ExactRational};
use bernlab_core::generators::Convention;
use gauss_quad::GaussLegendre;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cache;
use crate::format::rational_text;

const GAUSS_POINTS: usize = 20;
const ENVELOPE_FLOOR: f64 = 1e-30;

pub const DEFAULT_PANELS: usize = 64;
pub const ZETA_TOLERANCE: f64 = 1e-6;
pub const QUADRATURE_TOLERANCE: f64 = 1e-8;
pub const JENSEN_TOLERANCE: f64 = 1e-6;
pub const SERIES_TOLERANCE: f64 = 1e-8;
pub const EGF_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_EGF_TERMS: usize = 60;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalyticError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("x = {x} lies outside the convergence disk |x| < {radius}")]
    OutsideDisk { x: f64, radius: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    CompositeSimpson,
    GaussLegendre,
}

/// Truncated interval and panel layout for a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    upper_cutoff: f64,
    panel_count: usize,
    scheme: Scheme,
}

fn gauss_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(NonZeroUsize::new(GAUSS_POINTS).unwrap()))
}

impl QuadratureSpec {
    pub fn new(upper_cutoff: f64, panel_count: usize, scheme: Scheme) -> Result<Self, AnalyticError> {
        if !(upper_cutoff.is_finite() && upper_cutoff > 0.0) {
            return Err(AnalyticError::InvalidParameter(format!("upper cutoff {upper_cutoff} must be positive")));
        }
        if panel_count < 8 {
            return Err(AnalyticError::InvalidParameter(format!("panel count {panel_count} must be at least 8")));
        }
        Ok(Self { upper_cutoff, panel_count, scheme })
    }

    /// Gauss-Legendre layout whose cutoff puts `t^power * exp(-rate * t)`
    /// below 1e-30.
    pub fn for_envelope(power: f64, rate: f64) -> Self {
        Self { upper_cutoff: envelope_cutoff(power, rate), panel_count: DEFAULT_PANELS, scheme: Scheme::GaussLegendre }
    }

    pub fn upper_cutoff(&self) -> f64 {
        self.upper_cutoff
    }

    pub fn panel_count(&self) -> usize {
        self.panel_count
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn with_panels(self, panel_count: usize) -> Result<Self, AnalyticError> {
        Self::new(self.upper_cutoff, panel_count, self.scheme)
    }

    pub fn with_scheme(self, scheme: Scheme) -> Self {
        Self { scheme, ..self }
    }

    pub fn doubled(self) -> Self {
        Self { panel_count: self.panel_count * 2, ..self }
    }

    /// Integrates `f` over `[lower, upper_cutoff]` split into equal panels.
    pub fn integrate(&self, lower: f64, f: impl Fn(f64) -> f64) -> f64 {
        let width = (self.upper_cutoff - lower) / self.panel_count as f64;
        let mut total = 0.0;
        for i in 0..self.panel_count {
            let a = lower + width * i as f64;
            let b = a + width;
            total += match self.scheme {
                Scheme::GaussLegendre => gauss_rule().integrate(a, b, &f),
                Scheme::CompositeSimpson => (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b)),
            };
        }
        total
    }
}

/// Smallest `t` past the envelope peak with `t^power * exp(-rate * t) < 1e-30`.
pub fn envelope_cutoff(power: f64, rate: f64) -> f64 {
    let log_floor = ENVELOPE_FLOOR.ln();
    let log_env = |t: f64| power * t.ln() - rate * t;
    let mut t = (power / rate).max(1.0);
    while log_env(t) >= log_floor {
        t *= 1.25;
    }
    let (mut lo, mut hi) = (t / 1.25, t);
    if log_env(lo) < log_floor {
        return lo;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if log_env(mid) < log_floor {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ErrorMeasure {
    Relative,
    Absolute,
}

/// Outcome of one numeric comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    #[serde(with = "rational_text")]
    pub exact_value: ExactRational,
    pub target_value: f64,
    pub numeric_value: f64,
    pub residual: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub tolerance: f64,
    pub measure: ErrorMeasure,
    pub passed: bool,
    /// Reasons the check failed besides the main comparison.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(identity: String, exact: ExactRational, target: f64, numeric: f64, tolerance: f64) -> Self {
        let abs_error = (numeric - target).abs();
        let rel_error = if target == 0.0 { abs_error } else { abs_error / target.abs() };
        let measure = if target == 0.0 { ErrorMeasure::Absolute } else { ErrorMeasure::Relative };
        let mut report = Self {
            identity,
            exact_value: exact,
            target_value: target,
            numeric_value: numeric,
            residual: numeric - target,
            abs_error,
            rel_error,
            tolerance,
            measure,
            passed: false,
            notes: Vec::new(),
        };
        report.passed = report.error() <= tolerance && numeric.is_finite();
        report
    }

    fn absolute(mut self) -> Self {
        self.measure = ErrorMeasure::Absolute;
        self.passed = self.notes.is_empty() && self.abs_error <= self.tolerance && self.numeric_value.is_finite();
        self
    }

    fn flag(&mut self, note: String) {
        self.notes.push(note);
        self.passed = false;
    }

    /// The error under the report's measure.
    pub fn error(&self) -> f64 {
        match self.measure {
            ErrorMeasure::Relative => self.rel_error,
            ErrorMeasure::Absolute => self.abs_error,
        }
    }
}

fn bernoulli(k: usize) -> ExactRational {
    cache::bernoulli(k, Convention::Minus)
}

fn to_f64(r: &ExactRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn over_factorial(r: &ExactRational, k: usize) -> ExactRational {
    r / ExactRational::from_integer(factorial(k as u64))
}

fn check_tolerance(tol: f64) -> Result<f64, AnalyticError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(AnalyticError::InvalidParameter(format!("tolerance {tol} must be positive")))
    }
}

/// Quadrature at `q` and at twice the panels; flags the report when the two
/// differ by more than a tenth of the tolerance.
fn converged(q: QuadratureSpec, lower: f64, tol: f64, scale: f64, f: impl Fn(f64) -> f64) -> (f64, Option<String>) {
    let coarse = q.integrate(lower, &f);
    let fine = q.doubled().integrate(lower, &f);
    let change = (fine - coarse).abs() / if scale == 0.0 { 1.0 } else { scale.abs() };
    let note = (change > tol / 10.0).then(|| {
        format!("not converged: doubling {} panels changed the result by {change:e}", q.panel_count)
    });
    (fine, note)
}

/// ζ(2n) from a partial sum with an integral tail, against the closed form
/// in B_{2n}.
pub fn check_zeta_even(n: usize, terms: usize, tol: Option<f64>) -> Result<CheckReport, AnalyticError> {
    if n == 0 {
        return Err(AnalyticError::InvalidParameter("zeta check needs n >= 1".into()));
    }
    if terms < 10 {
        return Err(AnalyticError::InvalidParameter(format!("zeta check needs at least 10 terms, got {terms}")));
    }
    let tol = check_tolerance(tol.unwrap_or(ZETA_TOLERANCE))?;
    let s = 2 * n as i32;
    let exact = bernoulli(2 * n);
    let coefficient = over_factorial(&exact, 2 * n) * ExactRational::from_integer(BigInt::from(-sign(n))) / BigInt::from(2);
    let target = to_f64(&coefficient) * (2.0 * PI).powi(s);
    let partial: f64 = (1..=terms).rev().map(|k| (k as f64).powi(-s)).sum();
    let tail = (terms as f64).powi(1 - s) / (s - 1) as f64;
    Ok(CheckReport::new(format!("zeta(2n) n={n} terms={terms}"), exact, target, partial + tail, tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanaVariant {
    PowerOverExpm1,
    SinhSquared,
    PowerOverExpp1,
    CoshSquared,
}

impl PlanaVariant {
    pub const ALL: [PlanaVariant; 4] =
        [Self::PowerOverExpm1, Self::SinhSquared, Self::PowerOverExpp1, Self::CoshSquared];

    pub fn name(self) -> &'static str {
        match self {
            Self::PowerOverExpm1 => "power-over-expm1",
            Self::SinhSquared => "sinh-squared",
            Self::PowerOverExpp1 => "power-over-expp1",
            Self::CoshSquared => "cosh-squared",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == name)
    }

    fn alternating(self) -> bool {
        matches!(self, Self::PowerOverExpp1 | Self::CoshSquared)
    }

    /// The integrand, with its limit substituted at t = 0.
    fn integrand(self, n: usize) -> impl Fn(f64) -> f64 {
        let two_pi = 2.0 * PI;
        let nf = n as f64;
        move |t: f64| {
            let decay = (-two_pi * t).exp();
            match self {
                Self::PowerOverExpm1 if t == 0.0 => {
                    if n == 1 {
                        4.0 / two_pi
                    } else {
                        0.0
                    }
                }
                Self::PowerOverExpm1 => 4.0 * nf * t.powi(2 * n as i32 - 1) / (two_pi * t).exp_m1(),
                Self::SinhSquared if t == 0.0 => {
                    if n == 1 {
                        1.0 / PI
                    } else {
                        0.0
                    }
                }
                Self::SinhSquared => {
                    let d = -(-two_pi * t).exp_m1();
                    PI * t.powi(2 * n as i32) * 4.0 * decay / (d * d)
                }
                Self::PowerOverExpp1 => 4.0 * nf * t.powi(2 * n as i32 - 1) * decay / (1.0 + decay),
                Self::CoshSquared => {
                    let d = 1.0 + decay;
                    PI * t.powi(2 * n as i32) * 4.0 * decay / (d * d)
                }
            }
        }
    }
}

pub fn default_plana_spec(n: usize) -> QuadratureSpec {
    QuadratureSpec::for_envelope(2.0 * n as f64, 2.0 * PI)
}

/// Quadrature of a Plana-type integral against (−1)^{n−1}B_{2n}, scaled by
/// (1 − 2^{1−2n}) for the alternating pair.
pub fn check_plana(
    n: usize,
    variant: PlanaVariant,
    q: QuadratureSpec,
    tol: Option<f64>,
) -> Result<CheckReport, AnalyticError> {
    if n == 0 {
        return Err(AnalyticError::InvalidParameter("plana check needs n >= 1".into()));
    }
    let tol = check_tolerance(tol.unwrap_or(QUADRATURE_TOLERANCE))?;
    let b = bernoulli(2 * n);
    let mut exact = &b * BigInt::from(-sign(n));
    if variant.alternating() {
        let scale = ExactRational::new(BigInt::from(1), BigInt::from(2).pow(2 * n as u32 - 1));
        exact = &exact * (ExactRational::from_integer(BigInt::from(1)) - scale);
    }
    let target = to_f64(&exact);
    let (numeric, note) = converged(q, 0.0, tol, target, variant.integrand(n));
    let mut report = CheckReport::new(format!("plana {} n={n}", variant.name()), b, target, numeric, tol);
    if let Some(note) = note {
        report.flag(note);
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GlaisherVariant {
    ExpMinus,
    OddExpPlus,
}

impl GlaisherVariant {
    pub const ALL: [GlaisherVariant; 2] = [Self::ExpMinus, Self::OddExpPlus];

    pub fn name(self) -> &'static str {
        match self {
            Self::ExpMinus => "exp-minus",
            Self::OddExpPlus => "odd-exp-plus",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == name)
    }
}

/// Sum of `term(k)` over k = 1, 1 + step, ... until a term past the peak
/// drops below 1e-30.
fn exponential_series(step: usize, peak: f64, term: impl Fn(f64) -> f64) -> f64 {
    let mut terms = Vec::new();
    let mut k = 1usize;
    loop {
        let t = term(k as f64);
        terms.push(t);
        if (k as f64) > peak && t.abs() < ENVELOPE_FLOOR {
            break;
        }
        k += step;
    }
    terms.iter().rev().sum()
}

/// Glaisher's exponential series for B_{4n+2}. At n = 0 the ExpMinus form
/// includes the additive term 1/(4π).
pub fn check_glaisher(n: usize, variant: GlaisherVariant, tol: Option<f64>) -> Result<CheckReport, AnalyticError> {
    let tol = check_tolerance(tol.unwrap_or(QUADRATURE_TOLERANCE))?;
    let m = 4 * n + 2;
    let power = (4 * n + 1) as i32;
    let b = bernoulli(m);
    let (exact, numeric) = match variant {
        GlaisherVariant::ExpMinus => {
            let peak = power as f64 / (2.0 * PI);
            let sum = exponential_series(1, peak, |k| k.powi(power) / (2.0 * PI * k).exp_m1());
            let correction = if n == 0 { 1.0 / (4.0 * PI) } else { 0.0 };
            (b.clone(), 2.0 * m as f64 * sum + correction)
        }
        GlaisherVariant::OddExpPlus => {
            let peak = power as f64 / PI;
            let sum = exponential_series(2, peak, |k| {
                let decay = (-PI * k).exp();
                k.powi(power) * decay / (1.0 + decay)
            });
            let scale = BigInt::from(2).pow(power as u32) - 1;
            (&b * scale, 2.0 * m as f64 * sum)
        }
    };
    let target = to_f64(&exact);
    Ok(CheckReport::new(format!("glaisher {} n={n}", variant.name()), b, target, numeric, tol))
}

pub fn default_jensen_spec(n: usize) -> QuadratureSpec {
    QuadratureSpec::for_envelope(n as f64, 2.0 * PI)
}

/// (π/2)∫(1/2 + it)^n / cosh²(πt) dt over [−L, L] against (−1)^n B_n. The
/// imaginary part must vanish to within the tolerance.
pub fn check_jensen(n: usize, q: QuadratureSpec, tol: Option<f64>) -> Result<CheckReport, AnalyticError> {
    let tol = check_tolerance(tol.unwrap_or(JENSEN_TOLERANCE))?;
    let b = bernoulli(n);
    let exact = &b * BigInt::from(sign(n));
    let target = to_f64(&exact);
    let weight = |t: f64| {
        let decay = (-2.0 * PI * t.abs()).exp();
        let d = 1.0 + decay;
        PI / 2.0 * 4.0 * decay / (d * d)
    };
    let power = move |t: f64| Complex64::new(0.5, t).powu(n as u32);
    let lower = -q.upper_cutoff;
    let symmetric = QuadratureSpec { panel_count: 2 * q.panel_count, ..q };
    let (re, note) = converged(symmetric, lower, tol, target, |t| weight(t) * power(t).re);
    let im = symmetric.doubled().integrate(lower, |t| weight(t) * power(t).im);
    let mut report = CheckReport::new(format!("jensen n={n}"), b, target, re, tol);
    if let Some(note) = note {
        report.flag(note);
    }
    if im.abs() > tol {
        report.flag(format!("imaginary part {im:e} exceeds the tolerance"));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EgfVariant {
    Cos2Bx,
    Sin2Bx,
    CosBxHalf,
}

impl EgfVariant {
    pub const ALL: [EgfVariant; 3] = [Self::Cos2Bx, Self::Sin2Bx, Self::CosBxHalf];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cos2Bx => "cos2bx",
            Self::Sin2Bx => "sin2bx",
            Self::CosBxHalf => "cosbx-half",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == name)
    }

    pub fn radius(self) -> f64 {
        match self {
            Self::CosBxHalf => 2.0 * PI,
            _ => PI,
        }
    }
}

/// Σ_{k<terms} (−1)^k B_{2k} y^{2k}/(2k)!, coefficients reduced exactly.
fn cos_bernoulli_series(y: f64, terms: usize) -> f64 {
    let mut parts: Vec<f64> = (0..terms)
        .map(|k| to_f64(&(over_factorial(&bernoulli(2 * k), 2 * k) * BigInt::from(sign(k)))) * y.powi(2 * k as i32))
        .collect();
    parts.reverse();
    parts.iter().sum()
}

fn half_cot_half(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x / 2.0 / (x / 2.0).tan()
    }
}

/// Truncated umbral series against x·cot x, −x or (x/2)·cot(x/2).
pub fn check_cot_egf(x: f64, terms: usize, variant: EgfVariant, tol: Option<f64>) -> Result<CheckReport, AnalyticError> {
    let radius = variant.radius();
    let zero_allowed = variant == EgfVariant::CosBxHalf;
    if !x.is_finite() || x.abs() >= radius || (x == 0.0 && !zero_allowed) {
        return Err(AnalyticError::OutsideDisk { x, radius });
    }
    if terms == 0 {
        return Err(AnalyticError::InvalidParameter("egf check needs at least one term".into()));
    }
    let tol = check_tolerance(tol.unwrap_or(EGF_TOLERANCE))?;
    let (exact, numeric, target) = match variant {
        EgfVariant::Cos2Bx => (bernoulli(2 * (terms - 1)), cos_bernoulli_series(2.0 * x, terms), x / x.tan()),
        EgfVariant::CosBxHalf => (bernoulli(2 * (terms - 1)), cos_bernoulli_series(x, terms), half_cot_half(x)),
        EgfVariant::Sin2Bx => {
            let mut parts: Vec<f64> = (0..terms)
                .map(|k| {
                    let c = over_factorial(&bernoulli(2 * k + 1), 2 * k + 1) * BigInt::from(sign(k));
                    to_f64(&c) * (2.0 * x).powi(2 * k as i32 + 1)
                })
                .collect();
            parts.reverse();
            (bernoulli(1), parts.iter().sum(), -x)
        }
    };
    Ok(CheckReport::new(format!("egf {} x={x} terms={terms}", variant.name()), exact, target, numeric, tol).absolute())
}

pub fn default_abel_spec(x: f64) -> QuadratureSpec {
    QuadratureSpec::for_envelope(0.0, 2.0 * PI - x.abs())
}

/// 1 − 2x∫ sinh(xt)/(e^{2πt} − 1) dt against (x/2)cot(x/2), with the
/// truncated cos Bx series as a second reference.
pub fn check_abel_integral(
    x: f64,
    q: QuadratureSpec,
    terms: usize,
    tol: Option<f64>,
) -> Result<CheckReport, AnalyticError> {
    if !x.is_finite() || x == 0.0 || x.abs() >= 2.0 * PI {
        return Err(AnalyticError::OutsideDisk { x, radius: 2.0 * PI });
    }
    if terms == 0 {
        return Err(AnalyticError::InvalidParameter("abel check needs at least one series term".into()));
    }
    let tol = check_tolerance(tol.unwrap_or(SERIES_TOLERANCE))?;
    let two_pi = 2.0 * PI;
    let integrand = move |t: f64| {
        if t == 0.0 {
            return x / two_pi;
        }
        let num = ((x - two_pi) * t).exp() - ((-x - two_pi) * t).exp();
        num / (2.0 * -(-two_pi * t).exp_m1())
    };
    let target = half_cot_half(x);
    let (integral, note) = converged(q, 0.0, tol, target / (2.0 * x), integrand);
    let numeric = 1.0 - 2.0 * x * integral;
    let mut report = CheckReport::new(format!("abel x={x}"), bernoulli(2 * (terms - 1)), target, numeric, tol);
    if let Some(note) = note {
        report.flag(note);
    }
    let series = cos_bernoulli_series(x, terms);
    let series_error = (numeric - series).abs() / target.abs();
    if series_error > tol {
        report.flag(format!("series with {terms} terms gives {series}, relative gap {series_error:e}"));
    }
    Ok(report)
}

/// Natural log of a positive big integer, exact to f64 rounding.
fn big_ln(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().unwrap().ln()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().unwrap().ln() + shift as f64 * LN_2
    }
}

fn stirling_term(k: usize, n: f64) -> f64 {
    let denom = (2 * k * (2 * k - 1)) as f64;
    to_f64(&bernoulli(2 * k)) / denom / n.powi(2 * k as i32 - 1)
}

/// Signed error of the K-term Stirling series for log (n−1)!.
pub fn stirling_error(n: usize, k_terms: usize) -> f64 {
    let nf = n as f64;
    let exact = big_ln(&factorial(n as u64 - 1));
    let mut approx = (nf - 0.5) * nf.ln() - nf + 0.5 * (2.0 * PI).ln();
    approx += (1..=k_terms).rev().map(|k| stirling_term(k, nf)).sum::<f64>();
    approx - exact
}

/// Passes when the error is no larger than the first omitted term.
pub fn stirling_log_factorial(n: usize, k_terms: usize) -> Result<CheckReport, AnalyticError> {
    if n < 2 {
        return Err(AnalyticError::InvalidParameter("stirling check needs n >= 2".into()));
    }
    let exact_log = big_ln(&factorial(n as u64 - 1));
    let error = stirling_error(n, k_terms);
    let omitted = stirling_term(k_terms + 1, n as f64).abs();
    let mut report = CheckReport::new(
        format!("stirling n={n} terms={k_terms}"),
        bernoulli(2 * k_terms + 2),
        exact_log,
        exact_log + error,
        omitted,
    );
    report.residual = error;
    Ok(report.absolute())
}

/// |error| for K = 0..=max_terms.
pub fn stirling_error_curve(n: usize, max_terms: usize) -> Vec<f64> {
    (0..=max_terms).map(|k| stirling_error(n, k).abs()).collect()
}

/// Index of the smallest value when it is strictly inside the curve.
pub fn interior_minimum(curve: &[f64]) -> Option<usize> {
    let (idx, _) = curve.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1))?;
    (idx > 0 && idx + 1 < curve.len()).then_some(idx)
}

/// Parameters for one named check, with library defaults where omitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Zeta,
    Plana,
    Glaisher,
    Jensen,
    Egf,
    Abel,
    Stirling,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] =
        [Self::Zeta, Self::Plana, Self::Glaisher, Self::Jensen, Self::Egf, Self::Abel, Self::Stirling];

    pub fn name(self) -> &'static str {
        match self {
            Self::Zeta => "zeta",
            Self::Plana => "plana",
            Self::Glaisher => "glaisher",
            Self::Jensen => "jensen",
            Self::Egf => "egf",
            Self::Abel => "abel",
            Self::Stirling => "stirling",
        }
    }
}

pub type CheckJob = Box<dyn FnOnce() -> Result<CheckReport, AnalyticError> + Send>;

/// Every check over its default grid, as independent jobs in a fixed order.
pub fn default_grid_jobs() -> Vec<CheckJob> {
    let mut jobs: Vec<CheckJob> = Vec::new();
    for n in 1..=6 {
        jobs.push(Box::new(move || check_zeta_even(n, 100_000, None)));
    }
    for n in 1..=8 {
        for v in PlanaVariant::ALL {
            jobs.push(Box::new(move || check_plana(n, v, default_plana_spec(n), None)));
        }
    }
    for n in 0..=2 {
        for v in GlaisherVariant::ALL {
            jobs.push(Box::new(move || check_glaisher(n, v, None)));
        }
    }
    for n in 0..=8 {
        jobs.push(Box::new(move || check_jensen(n, default_jensen_spec(n), None)));
    }
    for x in [0.5, 1.0, 2.0] {
        for v in EgfVariant::ALL {
            jobs.push(Box::new(move || check_cot_egf(x, DEFAULT_EGF_TERMS, v, None)));
        }
    }
    for x in [0.001, 1.0, 4.0] {
        jobs.push(Box::new(move || check_abel_integral(x, default_abel_spec(x), DEFAULT_EGF_TERMS, None)));
    }
    jobs.push(Box::new(|| stirling_log_factorial(10, 3)));
    jobs
}

/// Every check over its default grid, run in order on this thread.
pub fn default_grid() -> Vec<Result<CheckReport, AnalyticError>> {
    default_grid_jobs().into_iter().map(|job| job()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn envelope_cutoff_bounds_the_envelope() {
        for (m, c) in [(0.0, 2.0 * PI), (2.0, 2.0 * PI), (16.0, 2.0 * PI), (0.0, 0.5)] {
            let t = envelope_cutoff(m, c);
            assert!(m * t.ln() - c * t < ENVELOPE_FLOOR.ln());
            assert!(t > m / c);
        }
    }

    #[test]
    fn quadrature_spec_rejects_bad_layouts() {
        assert!(QuadratureSpec::new(10.0, 7, Scheme::GaussLegendre).is_err());
        assert!(QuadratureSpec::new(0.0, 8, Scheme::GaussLegendre).is_err());
        assert!(QuadratureSpec::new(f64::NAN, 8, Scheme::CompositeSimpson).is_err());
    }

    #[test]
    fn both_schemes_integrate_a_polynomial() {
        for scheme in [Scheme::GaussLegendre, Scheme::CompositeSimpson] {
            let q = QuadratureSpec::new(2.0, 8, scheme).unwrap();
            assert!((q.integrate(0.0, |t| t * t * t) - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn plana_first_case() {
        let r = check_plana(1, PlanaVariant::PowerOverExpm1, default_plana_spec(1), None).unwrap();
        assert!(r.passed, "{r:?}");
        assert!((r.numeric_value - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn plana_alternating_first_case() {
        let r = check_plana(1, PlanaVariant::PowerOverExpp1, default_plana_spec(1), None).unwrap();
        assert!(r.passed, "{r:?}");
        assert!((r.target_value - 1.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn too_few_panels_is_flagged() {
        let q = QuadratureSpec::new(default_plana_spec(8).upper_cutoff(), 8, Scheme::CompositeSimpson).unwrap();
        let r = check_plana(8, PlanaVariant::SinhSquared, q, None).unwrap();
        assert!(!r.passed);
        assert!(r.notes.iter().any(|n| n.contains("not converged")));
    }

    #[test]
    fn glaisher_first_case_residual_is_reported() {
        let r = check_glaisher(1, GlaisherVariant::ExpMinus, None).unwrap();
        assert!(r.passed, "{r:?}");
        assert!((r.target_value - 1.0 / 42.0).abs() < 1e-15);
        let r = check_glaisher(0, GlaisherVariant::ExpMinus, None).unwrap();
        assert!((r.residual + 1.0 / (4.0 * PI)).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn sin_series_is_exact() {
        let r = check_cot_egf(0.7, 5, EgfVariant::Sin2Bx, None).unwrap();
        assert!(r.passed);
        assert!(r.abs_error < 1e-15);
    }

    #[test]
    fn cot_series_at_one() {
        let r = check_cot_egf(1.0, 20, EgfVariant::Cos2Bx, None).unwrap();
        assert!(r.abs_error < 1e-12, "{r:?}");
        assert!((r.target_value - 1.0 / 1f64.tan()).abs() < 1e-15);
    }

    #[test]
    fn egf_domain_guard() {
        assert!(matches!(check_cot_egf(5.0, 20, EgfVariant::Cos2Bx, None), Err(AnalyticError::OutsideDisk { .. })));
        assert!(check_cot_egf(5.0, 60, EgfVariant::CosBxHalf, None).is_ok());
        assert!(check_cot_egf(0.0, 20, EgfVariant::Sin2Bx, None).is_err());
    }

    #[test]
    fn zeta_with_many_terms() {
        let r = check_zeta_even(6, 100_000, None).unwrap();
        assert!(r.rel_error < 1e-9, "{r:?}");
        assert!(check_zeta_even(1, 9, None).is_err());
    }

    #[test]
    fn stirling_hundred() {
        let r = stirling_log_factorial(100, 2).unwrap();
        assert!(r.rel_error < 1e-12, "{r:?}");
    }

    #[test]
    fn big_ln_matches_small_values() {
        let x = factorial(20);
        assert!((big_ln(&x) - x.to_f64().unwrap().ln()).abs() < 1e-12);
        let big = factorial(400);
        let direct: f64 = (2..=400).map(|k| (k as f64).ln()).sum();
        assert!((big_ln(&big) - direct).abs() / direct < 1e-13);
    }

    #[test]
    fn interior_minimum_shapes() {
        assert_eq!(interior_minimum(&[3.0, 1.0, 2.0]), Some(1));
        assert_eq!(interior_minimum(&[3.0, 2.0, 1.0]), None);
        assert_eq!(interior_minimum(&[]), None);
    }

    #[test]
    fn report_measure_follows_target() {
        let r = CheckReport::new("t".into(), ExactRational::zero(), 0.0, 1e-9, 1e-8);
        assert_eq!(r.measure, ErrorMeasure::Absolute);
        assert!(r.passed);
        let r = CheckReport::new("t".into(), ExactRational::zero(), 2.0, 2.1, 1e-8);
        assert_eq!(r.measure, ErrorMeasure::Relative);
        assert!(!r.passed);
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(check_glaisher(1, GlaisherVariant::OddExpPlus, Some(0.0)).is_err());
        assert!(check_glaisher(1, GlaisherVariant::OddExpPlus, Some(-1.0)).is_err());
    }

    #[test]
    fn signed_exact_values_are_even_index() {
        assert!(bernoulli(8).is_negative());
        assert!(bernoulli(3).is_zero());
    }
}
