//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification or check failure, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::thread;

use bernlab_core::exact::ExactRational;
use bernlab_core::generators::{BernoulliCache, Convention, Method};
use bernlab_core::powersum::{build_integral_form, BuildMethod, PowerSumPolynomial};
use bernlab_core::umbral::{shift_power, UmbralPolynomial};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::analytic::{self, AnalyticError, CheckKind, CheckReport, EgfVariant, GlaisherVariant, PlanaVariant, Scheme};
use crate::bench::run_bench;
use crate::format::{self, OutputFormat, ValueDoc};
use crate::verify::run_verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bernlab", version, about = "Exact Bernoulli numbers, power sums and their cross-checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "BERNLAB_FORMAT", default_value = "plain")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print B_0..B_upto.
    Gen(GenArgs),
    /// Print a power-sum polynomial or its value at n.
    Powersum(PowersumArgs),
    /// Run every cross-method and identity suite.
    Verify(RangeArgs),
    /// Run a floating-point check.
    Analytic(AnalyticArgs),
    /// Time the generators and builders.
    Bench(RangeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Minus,
    Plus,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Minus => Convention::Minus,
            ConventionArg::Plus => Convention::Plus,
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    /// One of: de-moivre, de-moivre-even, euler-conv, genocchi, blissard-diff, matrix-inv, egf, det-hammond, det-factorial.
    #[arg(long, default_value = "de-moivre")]
    method: String,
    #[arg(long, default_value_t = 10)]
    upto: usize,
    #[arg(long, value_enum, default_value = "minus")]
    convention: ConventionArg,
    /// Also print the umbral relation (A+1)^N - A^N that the values satisfy.
    #[arg(long)]
    show_symbolic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PowersumMethod {
    ClosedForm,
    Pascal,
    Prouhet,
    Integral,
}

#[derive(Debug, Args)]
struct PowersumArgs {
    #[arg(long)]
    p: usize,
    #[arg(long, value_enum, default_value = "closed-form")]
    method: PowersumMethod,
    #[arg(long, value_enum, default_value = "minus")]
    convention: ConventionArg,
    /// Evaluate at this integer instead of printing the polynomial.
    #[arg(long, allow_hyphen_values = true)]
    n: Option<BigInt>,
    /// Also print the umbral form ((A+n)^(p+1) - A^(p+1))/(p+1).
    #[arg(long)]
    show_symbolic: bool,
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long, default_value_t = 20)]
    upto: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Zeta,
    Plana,
    Glaisher,
    Jensen,
    Egf,
    Abel,
    Stirling,
    /// Every check over its default grid.
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    GaussLegendre,
    Simpson,
}

#[derive(Debug, Args)]
struct AnalyticArgs {
    #[arg(long, value_enum)]
    check: CheckArg,
    #[arg(long)]
    n: Option<usize>,
    /// Series terms (zeta, egf, abel) or correction terms (stirling).
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    /// plana: power-over-expm1, sinh-squared, power-over-expp1, cosh-squared;
    /// glaisher: exp-minus, odd-exp-plus; egf: cos2bx, sin2bx, cosbx-half.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    panels: Option<usize>,
    #[arg(long)]
    cutoff: Option<f64>,
    #[arg(long, value_enum, default_value = "gauss-legendre")]
    scheme: SchemeArg,
    /// Tolerance override.
    #[arg(long, env = "BERNLAB_TOL")]
    tol: Option<f64>,
}

struct UsageError(String);

impl From<AnalyticError> for UsageError {
    fn from(e: AnalyticError) -> Self {
        Self(e.to_string())
    }
}

fn method_list() -> String {
    Method::GENERATORS.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ")
}

/// Parses `args` (program name first) and runs the command against `cache`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, cache: &mut BernoulliCache) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let fmt = cli.format;
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, fmt),
        Command::Powersum(a) => cmd_powersum(a, fmt),
        Command::Verify(a) => {
            let report = run_verify(a.upto, cache);
            let text = format::render_verify(&report, fmt);
            if let (false, Some(first)) = (report.passed, report.first_failure()) {
                let _ = writeln!(
                    err,
                    "verification failed: {}/{}: {}",
                    first.suite,
                    first.check,
                    first.detail.as_deref().unwrap_or("")
                );
            }
            Ok((text, report.passed))
        }
        Command::Analytic(a) => cmd_analytic(a, fmt),
        Command::Bench(a) => Ok((format::render_bench(&run_bench(a.upto), fmt), true)),
    };
    match result {
        Ok((text, passed)) => {
            let _ = out.write_all(text.as_bytes());
            if passed {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn cmd_gen(a: GenArgs, fmt: OutputFormat) -> Result<(String, bool), UsageError> {
    let method = Method::from_name(&a.method)
        .filter(|m| Method::GENERATORS.contains(m))
        .ok_or_else(|| UsageError(format!("unknown method '{}'; expected one of: {}", a.method, method_list())))?;
    let seq = method.generate(a.upto, a.convention.into());
    let symbolic = a.show_symbolic.then(|| {
        let n = a.upto.max(1);
        let one = ExactRational::from_integer(BigInt::from(1));
        let relation = shift_power(&one, n).sub(&UmbralPolynomial::symbol_power(n));
        format!("(A + 1)^{n} - A^{n} = {relation}")
    });
    Ok((format::render_sequence(&seq, symbolic.as_deref(), fmt), true))
}

fn cmd_powersum(a: PowersumArgs, fmt: OutputFormat) -> Result<(String, bool), UsageError> {
    let conv: Convention = a.convention.into();
    let (poly, name): (PowerSumPolynomial, &str) = match a.method {
        PowersumMethod::Integral if conv == Convention::Plus => {
            return Err(UsageError("the integral build exists only in the minus convention".into()))
        }
        PowersumMethod::Integral => (build_integral_form(a.p), "integral"),
        PowersumMethod::ClosedForm => (BuildMethod::ClosedForm.build(a.p, conv), BuildMethod::ClosedForm.name()),
        PowersumMethod::Pascal => (BuildMethod::PascalSystem.build(a.p, conv), BuildMethod::PascalSystem.name()),
        PowersumMethod::Prouhet => {
            (BuildMethod::ProuhetIntegrate.build(a.p, conv), BuildMethod::ProuhetIntegrate.name())
        }
    };
    let mut text = match &a.n {
        Some(n) => format::render_value(
            &ValueDoc {
                power: a.p,
                convention: conv.into(),
                method: name.into(),
                n: n.to_string(),
                value: poly.evaluate(n),
            },
            fmt,
        ),
        None => format::render_polynomial(&poly, name, fmt),
    };
    if a.show_symbolic && fmt == OutputFormat::Plain {
        let m = a.p + 1;
        match &a.n {
            Some(n) => {
                let shift = ExactRational::from_integer(n.clone());
                let body = shift_power(&shift, m).sub(&UmbralPolynomial::symbol_power(m));
                let scaled = body.scale(&ExactRational::new(BigInt::from(1), BigInt::from(m)));
                let base = if n.sign() == num_bigint::Sign::Minus { format!("A - {}", -n) } else { format!("A + {n}") };
                text.push_str(&format!("(({base})^{m} - A^{m})/{m} = {scaled}\n"));
            }
            None => text.push_str(&format!("((A + n)^{m} - A^{m})/{m}\n")),
        }
    }
    Ok((text, true))
}

fn parse_variant<V>(text: Option<&str>, default: V, parse: fn(&str) -> Option<V>, names: &str) -> Result<V, UsageError> {
    match text {
        None => Ok(default),
        Some(t) => parse(t).ok_or_else(|| UsageError(format!("unknown variant '{t}'; expected one of: {names}"))),
    }
}

fn quadrature(a: &AnalyticArgs, default: analytic::QuadratureSpec) -> Result<analytic::QuadratureSpec, UsageError> {
    let scheme = match a.scheme {
        SchemeArg::GaussLegendre => Scheme::GaussLegendre,
        SchemeArg::Simpson => Scheme::CompositeSimpson,
    };
    Ok(analytic::QuadratureSpec::new(
        a.cutoff.unwrap_or(default.upper_cutoff()),
        a.panels.unwrap_or(default.panel_count()),
        scheme,
    )?)
}

fn names<V: Copy>(all: &[V], name: fn(V) -> &'static str) -> String {
    all.iter().map(|v| name(*v)).collect::<Vec<_>>().join(", ")
}

fn single_check(kind: CheckKind, a: &AnalyticArgs) -> Result<CheckReport, UsageError> {
    let tol = a.tol;
    let report = match kind {
        CheckKind::Zeta => analytic::check_zeta_even(a.n.unwrap_or(1), a.terms.unwrap_or(100_000), tol)?,
        CheckKind::Plana => {
            let n = a.n.unwrap_or(1);
            let v = parse_variant(
                a.variant.as_deref(),
                PlanaVariant::PowerOverExpm1,
                PlanaVariant::from_name,
                &names(&PlanaVariant::ALL, PlanaVariant::name),
            )?;
            analytic::check_plana(n, v, quadrature(a, analytic::default_plana_spec(n.max(1)))?, tol)?
        }
        CheckKind::Glaisher => {
            let v = parse_variant(
                a.variant.as_deref(),
                GlaisherVariant::ExpMinus,
                GlaisherVariant::from_name,
                &names(&GlaisherVariant::ALL, GlaisherVariant::name),
            )?;
            analytic::check_glaisher(a.n.unwrap_or(1), v, tol)?
        }
        CheckKind::Jensen => {
            let n = a.n.unwrap_or(1);
            analytic::check_jensen(n, quadrature(a, analytic::default_jensen_spec(n))?, tol)?
        }
        CheckKind::Egf => {
            let v = parse_variant(
                a.variant.as_deref(),
                EgfVariant::Cos2Bx,
                EgfVariant::from_name,
                &names(&EgfVariant::ALL, EgfVariant::name),
            )?;
            analytic::check_cot_egf(a.x.unwrap_or(1.0), a.terms.unwrap_or(analytic::DEFAULT_EGF_TERMS), v, tol)?
        }
        CheckKind::Abel => {
            let x = a.x.unwrap_or(1.0);
            if !(x.is_finite() && x != 0.0 && x.abs() < 2.0 * std::f64::consts::PI) {
                return Err(AnalyticError::OutsideDisk { x, radius: 2.0 * std::f64::consts::PI }.into());
            }
            let q = quadrature(a, analytic::default_abel_spec(x))?;
            analytic::check_abel_integral(x, q, a.terms.unwrap_or(analytic::DEFAULT_EGF_TERMS), tol)?
        }
        CheckKind::Stirling => analytic::stirling_log_factorial(a.n.unwrap_or(10), a.terms.unwrap_or(3))?,
    };
    Ok(report)
}

fn cmd_analytic(a: AnalyticArgs, fmt: OutputFormat) -> Result<(String, bool), UsageError> {
    if let Some(t) = a.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(UsageError(format!("tolerance {t} must be positive")));
        }
    }
    let kind = match a.check {
        CheckArg::Zeta => CheckKind::Zeta,
        CheckArg::Plana => CheckKind::Plana,
        CheckArg::Glaisher => CheckKind::Glaisher,
        CheckArg::Jensen => CheckKind::Jensen,
        CheckArg::Egf => CheckKind::Egf,
        CheckArg::Abel => CheckKind::Abel,
        CheckArg::Stirling => CheckKind::Stirling,
        CheckArg::All => {
            let mut reports: Vec<CheckReport> = thread::scope(|scope| {
                let handles: Vec<_> = analytic::default_grid_jobs()
                    .into_iter()
                    .map(|job| scope.spawn(job))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("check worker panicked")).collect::<Result<_, _>>()
            })?;
            reports.sort_by(|x, y| x.identity.cmp(&y.identity));
            let passed = reports.iter().all(|r| r.passed);
            return Ok((format::render_reports(&reports, fmt), passed));
        }
    };
    let report = single_check(kind, &a)?;
    let passed = report.passed;
    Ok((format::render_reports(&[report], fmt), passed))
}
