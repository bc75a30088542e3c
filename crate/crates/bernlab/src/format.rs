//! Plain, JSON and CSV renderings, and the JSON document shapes.

use std::fmt::Write as _;

use bernlab_core::exact::{canonical, parse_rational, ExactRational};
use bernlab_core::generators::{BernoulliSequence, Convention};
use bernlab_core::powersum::PowerSumPolynomial;
use serde::{Deserialize, Serialize};

use crate::analytic::CheckReport;
use crate::bench::BenchRow;
use crate::verify::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

/// Serde adapter storing a rational as its canonical text.
pub mod rational_text {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &ExactRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&canonical(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}

mod rational_list {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[ExactRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(canonical))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<ExactRational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts.iter().map(|t| parse_rational(t).map_err(de::Error::custom)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionTag {
    Minus,
    Plus,
}

impl From<Convention> for ConventionTag {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Minus => Self::Minus,
            Convention::Plus => Self::Plus,
        }
    }
}

impl From<ConventionTag> for Convention {
    fn from(c: ConventionTag) -> Self {
        match c {
            ConventionTag::Minus => Self::Minus,
            ConventionTag::Plus => Self::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub convention: ConventionTag,
    pub method: String,
    #[serde(with = "rational_list")]
    pub values: Vec<ExactRational>,
}

impl From<&BernoulliSequence> for SequenceDoc {
    fn from(s: &BernoulliSequence) -> Self {
        Self { convention: s.convention.into(), method: s.method.name().into(), values: s.values.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub power: usize,
    pub convention: ConventionTag,
    pub method: String,
    /// Coefficients of n^0, n^1, ...
    #[serde(with = "rational_list")]
    pub coefficients: Vec<ExactRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub power: usize,
    pub convention: ConventionTag,
    pub method: String,
    pub n: String,
    #[serde(with = "rational_text")]
    pub value: ExactRational,
}

fn quoted(r: &ExactRational) -> String {
    format!("\"{}\"", canonical(r))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn render_sequence(seq: &BernoulliSequence, symbolic: Option<&str>, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => {
            let values: Vec<String> = seq.values.iter().map(canonical).collect();
            let mut out = values.join(", ");
            out.push('\n');
            if let Some(sym) = symbolic {
                out.push_str(sym);
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => json(&SequenceDoc::from(seq)),
        OutputFormat::Csv => {
            let mut out = String::from("index,value\n");
            for (k, v) in seq.values.iter().enumerate() {
                let _ = writeln!(out, "{k},{}", quoted(v));
            }
            out
        }
    }
}

pub fn render_polynomial(poly: &PowerSumPolynomial, method: &str, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => format!("{}\n", poly.human_form()),
        OutputFormat::Json => json(&PolynomialDoc {
            power: poly.power(),
            convention: poly.convention().into(),
            method: method.into(),
            coefficients: poly.coefficients().to_vec(),
        }),
        OutputFormat::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (k, c) in poly.coefficients().iter().enumerate() {
                let _ = writeln!(out, "{k},{}", quoted(c));
            }
            out
        }
    }
}

pub fn render_value(doc: &ValueDoc, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => format!("{}\n", canonical(&doc.value)),
        OutputFormat::Json => json(doc),
        OutputFormat::Csv => format!("n,value\n\"{}\",{}\n", doc.n, quoted(&doc.value)),
    }
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render_reports(reports: &[CheckReport], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(
                    out,
                    "{} {}: numeric {:.17e}, target {:.17e}, abs_error {:.3e}, rel_error {:.3e}, tolerance {:.1e} ({:?})",
                    status(r.passed),
                    r.identity,
                    r.numeric_value,
                    r.target_value,
                    r.abs_error,
                    r.rel_error,
                    r.tolerance,
                    r.measure,
                );
                for note in &r.notes {
                    let _ = writeln!(out, "    {note}");
                }
            }
            out
        }
        OutputFormat::Json => {
            if let [single] = reports {
                json(single)
            } else {
                json(&reports)
            }
        }
        OutputFormat::Csv => {
            let mut out = String::from(
                "identity,exact_value,target_value,numeric_value,residual,abs_error,rel_error,tolerance,measure,passed\n",
            );
            for r in reports {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{:e},{:e},{:e},{:e},{:e},{:e},{:?},{}",
                    r.identity,
                    quoted(&r.exact_value),
                    r.target_value,
                    r.numeric_value,
                    r.residual,
                    r.abs_error,
                    r.rel_error,
                    r.tolerance,
                    r.measure,
                    r.passed
                );
            }
            out
        }
    }
}

pub fn render_verify(report: &VerifyReport, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => {
            let mut out = String::new();
            for e in &report.entries {
                let _ = write!(out, "{} {}/{}", status(e.passed), e.suite, e.check);
                if let Some(detail) = &e.detail {
                    let _ = write!(out, ": {detail}");
                }
                out.push('\n');
            }
            let failed = report.entries.iter().filter(|e| !e.passed).count();
            let _ = writeln!(out, "{} checks up to {}, {} failed", report.entries.len(), report.upto, failed);
            out
        }
        OutputFormat::Json => json(report),
        OutputFormat::Csv => {
            let mut out = String::from("suite,check,passed,index,detail\n");
            for e in &report.entries {
                let index = e.index.map(|i| i.to_string()).unwrap_or_default();
                let detail = e.detail.as_deref().unwrap_or("").replace('"', "\"\"");
                let _ = writeln!(out, "{},{},{},{index},\"{detail}\"", e.suite, e.check, e.passed);
            }
            out
        }
    }
}

pub fn render_bench(rows: &[BenchRow], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => {
            let mut out = format!("{:<10} {:<16} {:>6} {:>12} {:>14}\n", "kind", "method", "upto", "seconds", "numerator_bits");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<10} {:<16} {:>6} {:>12.6} {:>14}",
                    r.kind, r.method, r.upto, r.seconds, r.max_numerator_bits
                );
            }
            let total: f64 = rows.iter().map(|r| r.seconds).sum();
            let _ = writeln!(out, "total {total:.6} s");
            out
        }
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => {
            let mut out = String::from("kind,method,upto,seconds,max_numerator_bits\n");
            for r in rows {
                let _ = writeln!(out, "{},{},{},{:.9},{}", r.kind, r.method, r.upto, r.seconds, r.max_numerator_bits);
            }
            out
        }
    }
}
