//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so every line is printed even when a
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bernlab::analytic::{
    check_abel_integral, check_cot_egf, check_glaisher, check_jensen, check_plana, check_zeta_even, default_abel_spec,
    default_jensen_spec, default_plana_spec, interior_minimum, stirling_error_curve, stirling_log_factorial,
    CheckReport, EgfVariant, GlaisherVariant, PlanaVariant,
};
use bernlab_core::exact::{canonical, parse_rational, ExactRational};
use bernlab_core::generators::{gen_de_moivre, gen_de_moivre_even, BernoulliSequence, Convention, DeterminantVariant, Method};
use bernlab_core::identities::{powersum_suite, umbral_suite, IdentityCase};
use bernlab_core::powersum::{brute_force_sum, build_closed_form, build_integral_form, BuildMethod, PowerSumPolynomial};
use num_bigint::BigInt;
use num_traits::Signed;

struct Outcome {
    passed: bool,
    summary: String,
    /// Failing sub-checks, printed under the criterion line.
    details: Vec<String>,
}

impl Outcome {
    fn from_details(summary: String, details: Vec<String>) -> Self {
        Self { passed: details.is_empty(), summary, details }
    }
}

fn q(text: &str) -> ExactRational {
    parse_rational(text).unwrap()
}

fn texts(values: &[ExactRational]) -> Vec<String> {
    values.iter().map(canonical).collect()
}

fn within(elapsed: Duration, limit: Duration, label: &str, details: &mut Vec<String>) {
    if elapsed > limit {
        details.push(format!("{label} took {elapsed:?}, limit {limit:?}"));
    }
}

fn mismatch(label: &str, reference: &BernoulliSequence, other: &BernoulliSequence) -> Option<String> {
    reference.first_mismatch(other).map(|m| {
        let show = |v: Option<ExactRational>| v.map(|v| canonical(&v)).unwrap_or_else(|| "missing".into());
        format!("{label}: index {} has {} vs {}", m.index, show(m.left), show(m.right))
    })
}

fn failing_cases(cases: &[IdentityCase]) -> Vec<String> {
    cases.iter().filter_map(|c| c.result.as_ref().err().map(|e| format!("{}: {e}", c.name))).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let minus = gen_de_moivre(10, Convention::Minus);
    let plus = gen_de_moivre(10, Convention::Plus);
    let elapsed = start.elapsed();
    let expected = ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66"];
    let mut details = Vec::new();
    if texts(&minus.values) != expected {
        details.push(format!("minus values {:?}", texts(&minus.values)));
    }
    let differing: Vec<usize> = (0..=10).filter(|&k| minus.values[k] != plus.values[k]).collect();
    if differing != [1] || plus.values[1] != q("1/2") {
        details.push(format!("plus differs at {differing:?}, B_1 = {}", canonical(&plus.values[1])));
    }
    within(elapsed, Duration::from_millis(10), "generation", &mut details);
    Outcome::from_details(format!("value table ({elapsed:?})"), details)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let reference = gen_de_moivre(40, Convention::Minus);
    let mut details = Vec::new();
    let evens = gen_de_moivre_even(20);
    for k in 1..=20 {
        if evens[k - 1] != reference.values[2 * k] {
            details.push(format!("de-moivre-even: B_{} = {}", 2 * k, canonical(&evens[k - 1])));
        }
    }
    for method in [Method::EulerConvolution, Method::Genocchi, Method::BlissardDifference, Method::EgfReciprocal, Method::MatrixInverse] {
        details.extend(mismatch(method.name(), &reference, &method.generate(40, Convention::Minus)));
    }
    let short = reference.truncated(16);
    for (variant, name) in [(DeterminantVariant::Hammond, "det-hammond"), (DeterminantVariant::Factorial, "det-factorial")] {
        details.extend(mismatch(name, &short, &bernlab_core::generators::gen_determinant(16, variant)));
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5), "all methods", &mut details);
    Outcome::from_details(format!("seven-way oracle agreement to 40, determinants to 16 ({elapsed:?})"), details)
}

fn criterion_3() -> Outcome {
    let cases = [
        (1, Convention::Plus, vec!["0", "1/2", "1/2"], "n^2/2 + n/2"),
        (2, Convention::Plus, vec!["0", "1/6", "1/2", "1/3"], "n^3/3 + n^2/2 + n/6"),
        (3, Convention::Minus, vec!["0", "0", "1/4", "-1/2", "1/4"], "n^4/4 - n^3/2 + n^2/4"),
    ];
    let mut details = Vec::new();
    for (p, conv, coeffs, human) in cases {
        let poly = build_closed_form(p, conv);
        if texts(poly.coefficients()) != coeffs || poly.human_form() != human {
            details.push(format!("p = {p} {conv}: {}", poly.human_form()));
        }
    }
    Outcome::from_details("first power-sum polynomials".into(), details)
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut comparisons = 0usize;
    for conv in [Convention::Minus, Convention::Plus] {
        for p in 0..=12 {
            let mut builds: Vec<(&str, PowerSumPolynomial)> =
                BuildMethod::ALL.into_iter().map(|m| (m.name(), m.build(p, conv))).collect();
            if conv == Convention::Minus {
                builds.push(("integral", build_integral_form(p)));
            }
            for n in 0..=200u64 {
                let truth = brute_force_sum(p, n, conv);
                for (name, poly) in &builds {
                    comparisons += 1;
                    let value = poly.evaluate(&BigInt::from(n));
                    if value != truth {
                        details.push(format!("{name} p = {p} {conv} n = {n}: {} vs {}", canonical(&value), canonical(&truth)));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10), "definitional oracle", &mut details);
    Outcome::from_details(format!("definitional oracle, {comparisons} comparisons ({elapsed:?})"), details)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let value = build_closed_form(10, Convention::Plus).evaluate(&BigInt::from(1000));
    let elapsed = start.elapsed();
    let brute: BigInt = (1..=1000u32).map(|k| BigInt::from(k).pow(10)).sum();
    let mut details = Vec::new();
    if value != ExactRational::from_integer(brute.clone()) {
        details.push(format!("polynomial {} vs brute force {brute}", canonical(&value)));
    }
    within(elapsed, Duration::from_millis(10), "polynomial route", &mut details);
    Outcome::from_details(format!("T_10(1000) = {} ({elapsed:?})", canonical(&value)), details)
}

fn criterion_6() -> Outcome {
    let minus = gen_de_moivre(21, Convention::Minus);
    let mut cases = powersum_suite(&minus, 20);
    cases.extend(umbral_suite(&minus, 20, 20, 20).into_iter().filter(|c| c.name == "plus-pascal"));
    let summary = format!("polynomial identity suite, {} identities for p <= 20", cases.len());
    Outcome::from_details(summary, failing_cases(&cases))
}

fn criterion_7() -> Outcome {
    let minus = gen_de_moivre(41, Convention::Minus);
    let cases: Vec<IdentityCase> =
        umbral_suite(&minus, 40, 30, 12).into_iter().filter(|c| c.name != "plus-pascal").collect();
    let names: Vec<&str> = cases.iter().map(|c| c.name).collect();
    Outcome::from_details(format!("umbral suite ({})", names.join(", ")), failing_cases(&cases))
}

fn report_line(r: &CheckReport) -> String {
    let mut line = format!(
        "{}: numeric {:.15e}, target {:.15e}, residual {:.3e}, {:?} error {:.3e} > {:.0e}",
        r.identity,
        r.numeric_value,
        r.target_value,
        r.residual,
        r.measure,
        r.error(),
        r.tolerance
    );
    for note in &r.notes {
        line.push_str("; ");
        line.push_str(note);
    }
    line
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut details = Vec::new();
    for n in [1, 2] {
        reports.push(check_zeta_even(n, 100_000, Some(1e-6)));
    }
    for n in 1..=8 {
        let mut values = Vec::new();
        for v in PlanaVariant::ALL {
            let r = check_plana(n, v, default_plana_spec(n), Some(1e-8));
            if let Ok(r) = &r {
                values.push(r.numeric_value);
            }
            reports.push(r);
        }
        if let [a, b, c, d] = values[..] {
            for (x, y, pair) in [(a, b, "expm1/sinh"), (c, d, "expp1/cosh")] {
                if (x - y).abs() > 1e-10 * x.abs() {
                    details.push(format!("plana {pair} n = {n}: {x:e} vs {y:e}"));
                }
            }
        }
    }
    for n in 0..=2 {
        for v in GlaisherVariant::ALL {
            reports.push(check_glaisher(n, v, Some(1e-8)));
        }
    }
    for n in 0..=8 {
        reports.push(check_jensen(n, default_jensen_spec(n), Some(1e-6)));
    }
    for x in [0.5, 1.0, 2.0] {
        for v in EgfVariant::ALL {
            reports.push(check_cot_egf(x, 60, v, Some(1e-10)));
        }
    }
    for x in [0.001, 1.0, 4.0] {
        reports.push(check_abel_integral(x, default_abel_spec(x), 60, Some(1e-8)));
    }
    let total = reports.len();
    for r in reports {
        match r {
            Ok(r) if r.passed => {}
            Ok(r) => details.push(report_line(&r)),
            Err(e) => details.push(format!("check rejected its parameters: {e}")),
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30), "analytic suite", &mut details);
    Outcome::from_details(format!("analytic suite, {total} checks ({elapsed:?})"), details)
}

fn criterion_9() -> Outcome {
    let mut details = Vec::new();
    let r = stirling_log_factorial(10, 3).unwrap();
    if !r.passed {
        details.push(format!("n = 10, 3 terms: |error| {:e} above first omitted term {:e}", r.abs_error, r.tolerance));
    }
    let curve = stirling_error_curve(2, 15);
    let turning = interior_minimum(&curve);
    match turning {
        Some(k) if curve[k..].windows(2).all(|w| w[1] >= w[0]) => {}
        _ => details.push(format!("n = 2 error curve has no interior minimum: {curve:?}")),
    }
    let summary = format!(
        "Stirling divergence witness (n = 10 error {:.2e} <= {:.2e}; n = 2 minimum at {} terms)",
        r.abs_error,
        r.tolerance,
        turning.map_or("none".into(), |k| k.to_string())
    );
    Outcome::from_details(summary, details)
}

fn criterion_10() -> Outcome {
    let b = gen_de_moivre(40, Convention::Minus);
    let details: Vec<String> = (1..=20)
        .filter(|&k| {
            let v = &b.values[2 * k];
            if k % 2 == 1 {
                !v.is_positive()
            } else {
                !v.is_negative()
            }
        })
        .map(|k| format!("B_{} = {}", 2 * k, canonical(&b.values[2 * k])))
        .collect();
    Outcome::from_details("sign alternation for 1 <= k <= 20".into(), details)
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = Vec::new();
    println!();
    for (n, run) in criteria {
        let outcome = run();
        println!("criterion {n:>2}: {} {}", if outcome.passed { "PASS" } else { "FAIL" }, outcome.summary);
        for d in &outcome.details {
            println!("    {d}");
        }
        if !outcome.passed {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("\nacceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("\nacceptance: {} of 10 criteria fail: {failed:?}", failed.len());
        ExitCode::FAILURE
    }
}
