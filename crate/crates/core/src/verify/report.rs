use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Value};

/// A failed check: the operation and inputs that reproduce `actual`, and
/// what the property predicted instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub operation: String,
    pub inputs: Vec<(String, String)>,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(operation: &str, inputs: &[(&str, String)], expected: impl ToString, actual: impl ToString) -> Self {
        Counterexample {
            operation: operation.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn input(&self, name: &str) -> Option<&str> {
        self.inputs.iter().find(|(k, _)| k == name).map(|(_, v)| v.as_str())
    }

    fn to_json(&self) -> Value {
        let inputs: serde_json::Map<String, Value> =
            self.inputs.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({
            "operation": self.operation,
            "inputs": inputs,
            "expected": self.expected,
            "actual": self.actual,
        })
    }
}

/// Outcome of one property over all of its cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub suite: String,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// At most [`PropertyReport::KEPT`] counterexamples are stored; there is
    /// at least one whenever `failures > 0`.
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl PropertyReport {
    pub const KEPT: usize = 5;

    pub fn new(suite: &str, name: &str) -> Self {
        PropertyReport {
            suite: suite.to_string(),
            name: name.to_string(),
            cases: 0,
            failures: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn pass(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, cx: Counterexample) {
        self.cases += 1;
        self.failures += 1;
        if self.counterexamples.len() < Self::KEPT {
            self.counterexamples.push(cx);
        }
    }

    /// Records one case: passes if `ok`, otherwise builds the counterexample.
    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        if ok {
            self.pass();
        } else {
            self.fail(cx());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Results of a campaign, in the order the properties ran.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn extend(&mut self, other: SuiteReport) {
        self.properties.extend(other.properties);
    }

    pub fn total_cases(&self) -> usize {
        self.properties.iter().map(|p| p.cases).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.properties.iter().map(|p| p.failures).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = (&PropertyReport, &Counterexample)> {
        self.properties.iter().flat_map(|p| p.counterexamples.iter().map(move |c| (p, c)))
    }

    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// Machine-readable form. Wall times are included only on request so
    /// that the default document is reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> Value {
        let properties: Vec<Value> = self
            .properties
            .iter()
            .map(|p| {
                let mut v = json!({
                    "suite": p.suite,
                    "name": p.name,
                    "cases": p.cases,
                    "failures": p.failures,
                    "counterexamples": p.counterexamples.iter().map(Counterexample::to_json).collect::<Vec<_>>(),
                });
                if timings {
                    v["seconds"] = json!(format!("{:.3}", p.elapsed.as_secs_f64()));
                }
                v
            })
            .collect();
        json!({
            "properties": properties,
            "total_cases": self.total_cases(),
            "total_failures": self.total_failures(),
            "passed": self.passed(),
        })
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for p in &self.properties {
            let status = if p.passed() { "ok" } else { "FAILED" };
            let _ = write!(out, "[{}] {}: {} cases, {} failures, {}", p.suite, p.name, p.cases, p.failures, status);
            if timings {
                let _ = write!(out, " ({:.3}s)", p.elapsed.as_secs_f64());
            }
            out.push('\n');
            for cx in &p.counterexamples {
                let inputs: Vec<String> = cx.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "    {} {}", cx.operation, inputs.join(" "));
                let _ = writeln!(out, "        expected: {}", cx.expected);
                let _ = writeln!(out, "        actual:   {}", cx.actual);
            }
        }
        let _ = write!(
            out,
            "{} properties, {} cases, {} failures",
            self.properties.len(),
            self.total_cases(),
            self.total_failures()
        );
        out
    }
}
