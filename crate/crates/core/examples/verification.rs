//! A seeded verification campaign, and replaying one of its
//! counterexamples. The literal support claim for `d_mu d_{-lambda} w_j`
//! fails; its corrected bound holds.
//!
//! Run with `cargo run --release --example verification [seed]`.

use virasoro::verify::{replay, run_all, SuiteConfig};

fn main() {
    let seed = std::env::args().nth(1).map_or(0, |s| s.parse().expect("seed must be an integer"));
    let report = run_all(&SuiteConfig::with_seed(seed));
    for p in &report.properties {
        let status = if p.passed() { "ok" } else { "FAILED" };
        println!("[{}] {}: {} cases, {} failures, {status}", p.suite, p.name, p.cases, p.failures);
    }
    let first = report.counterexamples().next();
    if let Some((property, cx)) = first {
        println!("\nfirst counterexample, from {}:", property.name);
        for (k, v) in &cx.inputs {
            println!("  {k} = {v}");
        }
        println!("  expected {}\n  actual   {}", cx.expected, cx.actual);
        println!("  replayed {}", replay(cx).expect("replayable"));
    }
}
