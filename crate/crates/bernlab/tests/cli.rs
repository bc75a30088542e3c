use std::process::Command;

use bernlab::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use bernlab::format::{PolynomialDoc, SequenceDoc, ValueDoc};
use bernlab::verify::VerifyReport;
use bernlab_core::exact::{parse_rational, ExactRational};
use bernlab_core::generators::{gen_de_moivre, BernoulliCache, Convention};
use num_bigint::BigInt;
use proptest::prelude::*;

fn invoke_with(cache: &mut BernoulliCache, args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bernlab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err, cache);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    invoke_with(&mut BernoulliCache::new(), args)
}

#[test]
fn gen_defaults_and_conventions() {
    assert_eq!(invoke(&["gen", "--upto", "4"]), (EXIT_OK, "1, -1/2, 1/6, 0, -1/30\n".into(), String::new()));
    let (code, out, _) = invoke(&["gen", "--method", "de-moivre", "--upto", "4", "--convention", "plus"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "1, 1/2, 1/6, 0, -1/30\n"));
}

#[test]
fn gen_is_deterministic() {
    let first = invoke(&["gen", "--method", "de-moivre", "--upto", "4"]);
    for _ in 0..3 {
        assert_eq!(invoke(&["gen", "--method", "de-moivre", "--upto", "4"]), first);
    }
}

#[test]
fn every_method_prints_the_same_values() {
    let expected = invoke(&["gen", "--upto", "12"]).1;
    for m in ["de-moivre-even", "euler-conv", "genocchi", "blissard-diff", "matrix-inv", "egf", "det-hammond", "det-factorial"] {
        assert_eq!(invoke(&["gen", "--method", m, "--upto", "12"]).1, expected, "{m}");
    }
}

#[test]
fn unknown_method_is_a_usage_error() {
    let (code, out, err) = invoke(&["gen", "--method", "nosuch"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("euler-conv") && err.contains("det-factorial"), "{err}");
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(invoke(&["gen", "--upto", "-3"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["powersum", "--p", "2", "--method", "integral", "--convention", "plus"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["analytic", "--check", "plana", "--variant", "nosuch"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["analytic", "--check", "zeta", "--tol", "0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["analytic", "--check", "plana", "--panels", "4"]).0, EXIT_USAGE);
}

#[test]
fn show_symbolic_prints_the_umbral_relation() {
    let (_, out, _) = invoke(&["gen", "--upto", "4", "--show-symbolic"]);
    assert_eq!(out, "1, -1/2, 1/6, 0, -1/30\n(A + 1)^4 - A^4 = 1 + 4*A + 6*A^2 + 4*A^3\n");
    let (_, out, _) = invoke(&["powersum", "--p", "1", "--n", "-3", "--show-symbolic"]);
    assert_eq!(out, "6\n((A - 3)^2 - A^2)/2 = 9/2 - 3*A\n");
}

#[test]
fn powersum_examples() {
    assert_eq!(invoke(&["powersum", "--p", "2", "--convention", "plus"]).1, "n^3/3 + n^2/2 + n/6\n");
    assert_eq!(
        invoke(&["powersum", "--p", "10", "--convention", "plus", "--n", "1000"]).1,
        "91409924241424243424241924242500\n"
    );
    assert_eq!(invoke(&["powersum", "--p", "0", "--n", "7"]).1, "7\n");
    for m in ["closed-form", "pascal", "prouhet", "integral"] {
        assert_eq!(invoke(&["powersum", "--p", "3", "--method", m]).1, "n^4/4 - n^3/2 + n^2/4\n", "{m}");
    }
}

#[test]
fn powersum_evaluates_at_large_and_negative_n() {
    let big = "123456789012345678901234567890";
    let (code, out, _) = invoke(&["powersum", "--p", "1", "--convention", "plus", "--n", big]);
    assert_eq!(code, EXIT_OK);
    let n: BigInt = big.parse().unwrap();
    assert_eq!(out.trim(), ((&n * (&n + 1u32)) / 2u32).to_string());
    // Negative n evaluates the polynomial.
    assert_eq!(invoke(&["powersum", "--p", "2", "--n", "-2"]).1, "-5\n");
}

#[test]
fn json_round_trips_rationals() {
    let (_, out, _) = invoke(&["--format", "json", "gen", "--upto", "30", "--method", "egf"]);
    let doc: SequenceDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.values, gen_de_moivre(30, Convention::Minus).values);
    assert_eq!(doc.method, "egf");

    let (_, out, _) = invoke(&["--format", "json", "powersum", "--p", "4", "--convention", "plus"]);
    let doc: PolynomialDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.coefficients[1], parse_rational("-1/30").unwrap());

    let (_, out, _) = invoke(&["--format", "json", "powersum", "--p", "2", "--n", "10"]);
    let doc: ValueDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.value, ExactRational::from_integer(285.into()));

    let (_, out, _) = invoke(&["--format", "json", "analytic", "--check", "plana", "--n", "2"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["exact_value"], "-1/30");
    assert_eq!(report["passed"], true);

    let (_, out, _) = invoke(&["--format", "json", "verify", "--upto", "6"]);
    let report: VerifyReport = serde_json::from_str(&out).unwrap();
    assert!(report.passed);
}

#[test]
fn csv_quotes_rationals() {
    let (_, out, _) = invoke(&["--format", "csv", "gen", "--upto", "2"]);
    assert_eq!(out, "index,value\n0,\"1\"\n1,\"-1/2\"\n2,\"1/6\"\n");
}

#[test]
fn verify_passes_on_a_clean_cache() {
    let (code, out, _) = invoke(&["verify", "--upto", "20"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains(", 0 failed"));
    assert_eq!(invoke(&["verify", "--upto", "0"]).0, EXIT_OK);
}

#[test]
fn verify_reports_an_injected_fault() {
    let mut cache = BernoulliCache::new();
    cache.override_value(Convention::Minus, 8, parse_rational("-1/31").unwrap());
    let (code, out, err) = invoke_with(&mut cache, &["verify", "--upto", "12"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("index 8") && err.contains("-1/31") && err.contains("-1/30"), "{err}");
    assert!(out.contains("FAIL"));
}

#[test]
fn analytic_examples() {
    let (code, out, _) = invoke(&["analytic", "--check", "plana", "--n", "1"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("PASS"));
    assert_eq!(invoke(&["analytic", "--check", "stirling", "--n", "10", "--terms", "3"]).0, EXIT_OK);
    let (code, _, err) = invoke(&["analytic", "--check", "egf", "--x", "5.0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("convergence disk"));
    assert_eq!(invoke(&["analytic", "--check", "egf", "--x", "5.0", "--variant", "cosbx-half"]).0, EXIT_OK);
    assert_eq!(invoke(&["analytic", "--check", "abel", "--x", "-4"]).0, EXIT_OK);
    assert_eq!(invoke(&["analytic", "--check", "jensen", "--n", "4", "--scheme", "simpson", "--panels", "400"]).0, EXIT_OK);
}

#[test]
fn failed_check_exits_one() {
    // Ten terms plus the tail are nowhere near 1e-12.
    let (code, out, _) = invoke(&["analytic", "--check", "zeta", "--n", "1", "--terms", "10", "--tol", "1e-12"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(out.starts_with("FAIL"));
}

#[test]
fn bench_rows() {
    let (code, out, _) = invoke(&["--format", "csv", "bench", "--upto", "0"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "kind,method,upto,seconds,max_numerator_bits");
    assert_eq!(lines.len(), 1 + 10 + 4);
    assert!(lines[1..].iter().all(|l| l.split(',').nth(2) == Some("0")));
}

#[test]
fn binary_exit_codes_and_env() {
    let exe = env!("CARGO_BIN_EXE_bernlab");
    let ok = Command::new(exe).args(["gen", "--upto", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "1, -1/2, 1/6, 0, -1/30\n");
    let usage = Command::new(exe).args(["gen", "--method", "nosuch"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let json = Command::new(exe).args(["gen", "--upto", "2"]).env("BERNLAB_FORMAT", "json").output().unwrap();
    assert!(serde_json::from_slice::<SequenceDoc>(&json.stdout).is_ok());
    let strict = Command::new(exe)
        .args(["analytic", "--check", "zeta", "--n", "1", "--terms", "10"])
        .env("BERNLAB_TOL", "1e-12")
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn json_sequences_round_trip(upto in 0usize..40, plus: bool) {
        let conv = if plus { "plus" } else { "minus" };
        let (_, out, _) = invoke(&["--format", "json", "gen", "--upto", &upto.to_string(), "--convention", conv]);
        let doc: SequenceDoc = serde_json::from_str(&out).unwrap();
        let expected = gen_de_moivre(upto, if plus { Convention::Plus } else { Convention::Minus });
        prop_assert_eq!(doc.values, expected.values);
    }
}
