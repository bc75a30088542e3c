//! Wall-clock timings of the generators and power-sum builders.

use std::time::Instant;

use bernlab_core::exact::ExactRational;
use bernlab_core::generators::{Convention, Method};
use bernlab_core::powersum::{build_integral_form, BuildMethod};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub kind: String,
    pub method: String,
    pub upto: usize,
    pub seconds: f64,
    pub max_numerator_bits: u64,
}

fn max_bits<'a>(values: impl IntoIterator<Item = &'a ExactRational>) -> u64 {
    values.into_iter().map(|v| v.numer().bits()).max().unwrap_or(0)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

/// One row per generator (B_0..B_upto) and per builder (p = 0..=upto).
pub fn run_bench(upto: usize) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for method in Method::GENERATORS.into_iter().chain([Method::ProuhetFit]) {
        let (seq, seconds) = timed(|| method.generate(upto, Convention::Minus));
        rows.push(BenchRow {
            kind: "generator".into(),
            method: method.name().into(),
            upto,
            seconds,
            max_numerator_bits: max_bits(&seq.values),
        });
    }
    let builders: Vec<(&str, Box<dyn Fn(usize) -> Vec<ExactRational>>)> = BuildMethod::ALL
        .into_iter()
        .map(|m| {
            let f: Box<dyn Fn(usize) -> Vec<ExactRational>> =
                Box::new(move |p| m.build(p, Convention::Minus).coefficients().to_vec());
            (m.name(), f)
        })
        .chain([("integral", Box::new(|p| build_integral_form(p).coefficients().to_vec()) as Box<_>)])
        .collect();
    for (name, build) in builders {
        let (coeffs, seconds) = timed(|| (0..=upto).flat_map(&build).collect::<Vec<_>>());
        rows.push(BenchRow {
            kind: "powersum".into(),
            method: name.into(),
            upto,
            seconds,
            max_numerator_bits: max_bits(&coeffs),
        });
    }
    rows
}
