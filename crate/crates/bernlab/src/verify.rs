//! Cross-method agreement and identity suites against a reference cache.

use std::thread;

use bernlab_core::exact::canonical;
use bernlab_core::generators::{convert_convention, BernoulliCache, BernoulliSequence, Convention, Method};
use bernlab_core::identities::{powersum_suite, umbral_suite, IdentityCase};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub upto: usize,
    pub passed: bool,
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&VerifyEntry> {
        self.entries.iter().find(|e| !e.passed)
    }
}

fn text(v: Option<&bernlab_core::exact::ExactRational>) -> String {
    v.map(canonical).unwrap_or_else(|| "missing".into())
}

fn compare(suite: &str, reference: &BernoulliSequence, candidate: &BernoulliSequence) -> VerifyEntry {
    let mismatch = reference.first_mismatch(candidate);
    VerifyEntry {
        suite: suite.into(),
        check: format!("{}/{}", candidate.method.name(), candidate.convention.name()),
        passed: mismatch.is_none(),
        index: mismatch.as_ref().map(|m| m.index),
        detail: mismatch.map(|m| {
            format!(
                "index {}: reference {}, {} {}",
                m.index,
                text(m.left.as_ref()),
                candidate.method.name(),
                text(m.right.as_ref())
            )
        }),
    }
}

fn identity_entries(suite: &str, cases: Vec<IdentityCase>) -> Vec<VerifyEntry> {
    cases
        .into_iter()
        .map(|c| VerifyEntry {
            suite: suite.into(),
            check: c.name.into(),
            passed: c.result.is_ok(),
            index: c.result.as_ref().err().map(|f| f.index),
            detail: c.result.err().map(|f| f.to_string()),
        })
        .collect()
}

/// Runs every suite up to `upto`, taking reference values from `cache`.
///
/// Generators are recomputed from scratch and compared with the cached
/// prefix, so a corrupted cache entry shows up as a mismatch.
pub fn run_verify(upto: usize, cache: &mut BernoulliCache) -> VerifyReport {
    let minus = cache.prefix(upto + 1, Convention::Minus);
    let plus = cache.prefix(upto + 1, Convention::Plus);
    let minus_ref = minus.truncated(upto);
    let plus_ref = plus.truncated(upto);

    let mut entries: Vec<VerifyEntry> = thread::scope(|scope| {
        let mut handles = Vec::new();
        for method in Method::GENERATORS.into_iter().chain([Method::ProuhetFit]) {
            for (conv, reference) in [(Convention::Minus, &minus_ref), (Convention::Plus, &plus_ref)] {
                handles.push(scope.spawn(move || vec![compare("generators", reference, &method.generate(upto, conv))]));
            }
        }
        handles.push(scope.spawn(|| {
            let mut converted = convert_convention(&minus_ref);
            converted.method = Method::DeMoivre;
            let mut e = compare("conventions", &plus_ref, &converted);
            e.check = "minus-to-plus".into();
            let mut out = vec![e];
            for (name, seq) in [("minus", &minus), ("plus", &plus)] {
                let violation = seq.check_invariants().err();
                out.push(VerifyEntry {
                    suite: "sequence".into(),
                    check: format!("invariants/{name}"),
                    passed: violation.is_none(),
                    index: None,
                    detail: violation.map(|v| v.to_string()),
                });
            }
            out
        }));
        handles.push(scope.spawn(|| identity_entries("powersum", powersum_suite(&minus, upto))));
        handles.push(scope.spawn(|| identity_entries("umbral", umbral_suite(&minus, upto, upto, upto))));
        handles.into_iter().flat_map(|h| h.join().expect("verification worker panicked")).collect()
    });
    entries.sort_by(|a, b| (&a.suite, &a.check).cmp(&(&b.suite, &b.check)));
    let passed = entries.iter().all(|e| e.passed);
    VerifyReport { upto, passed, entries }
}
