//! Re-running a recorded counterexample from its inputs alone.

use std::sync::Arc;

use thiserror::Error;

use super::config::BracketRules;
use super::report::Counterexample;
use crate::algebra::UeaElement;
use crate::modules::{act_with, psi_decompose, ModuleFamily};
use crate::text::{self, parse_element, parse_expression, parse_polynomial, parse_psi};
use crate::whittaker::{annihilator_in_z, extract_wxi, hom_space, is_surjective_hom, whittaker_vectors};

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("missing input `{0}`")]
    MissingInput(String),
    #[error("bad input `{name}`: {message}")]
    BadInput { name: String, message: String },
    #[error("{0}")]
    Failed(String),
}

fn input<'a>(cx: &'a Counterexample, name: &str) -> Result<&'a str, ReplayError> {
    cx.input(name).ok_or_else(|| ReplayError::MissingInput(name.to_string()))
}

fn bad(name: &str) -> impl Fn(String) -> ReplayError + '_ {
    move |message| ReplayError::BadInput { name: name.to_string(), message }
}

fn failed(e: impl ToString) -> ReplayError {
    ReplayError::Failed(e.to_string())
}

fn rules(cx: &Counterexample) -> Result<BracketRules, ReplayError> {
    match cx.input("bracket") {
        None => Ok(BracketRules::Virasoro),
        Some(name) => BracketRules::from_name(name).ok_or_else(|| bad("bracket")(format!("unknown bracket `{name}`"))),
    }
}

fn family(cx: &Counterexample) -> Result<Arc<ModuleFamily>, ReplayError> {
    let value: serde_json::Value = serde_json::from_str(input(cx, "family")?).map_err(|e| bad("family")(e.to_string()))?;
    text::family_from_json(&value).map(Arc::new).map_err(|e| bad("family")(e.to_string()))
}

fn level(cx: &Counterexample) -> Result<u32, ReplayError> {
    input(cx, "level")?.parse().map_err(|e: std::num::ParseIntError| bad("level")(e.to_string()))
}

/// Recomputes the `actual` side of a counterexample. Comparing the result
/// with `cx.actual` confirms that the failure reproduces.
pub fn replay(cx: &Counterexample) -> Result<String, ReplayError> {
    match cx.operation.as_str() {
        "evaluate" => {
            let expr = parse_expression(input(cx, "expr")?).map_err(|e| bad("expr")(e.to_string()))?;
            Ok(expr.evaluate_with(&rules(cx)?).to_string())
        }
        "act" => {
            let family = family(cx)?;
            let rules = rules(cx)?;
            let expr = parse_expression(input(cx, "expr")?).map_err(|e| bad("expr")(e.to_string()))?;
            let u: UeaElement = expr.evaluate_with(&rules);
            let m = parse_element(input(cx, "element")?, &family).map_err(|e| bad("element")(e.to_string()))?;
            Ok(act_with(&rules, &u, &m).to_string())
        }
        "whittaker-dim" | "whittaker-vector" => {
            let family = family(cx)?;
            let psi = parse_psi(input(cx, "psi")?).map_err(|e| bad("psi")(e.to_string()))?;
            let basis = whittaker_vectors(&family, &psi, level(cx)?).map_err(failed)?;
            if cx.operation == "whittaker-dim" {
                return Ok(basis.dim().to_string());
            }
            let index: usize = input(cx, "index")?.parse().map_err(|e: std::num::ParseIntError| bad("index")(e.to_string()))?;
            Ok(match index.checked_sub(1).and_then(|i| basis.vectors.get(i)) {
                Some(v) => v.to_string(),
                None => format!("dim Wh = {}", basis.dim()),
            })
        }
        "extract-wxi" => {
            let xi = text::parse_signed_rational(input(cx, "xi")?, 1).map_err(|e| bad("xi")(e.to_string()))?;
            let family = Arc::new(ModuleFamily::universal(xi));
            let v = parse_element(input(cx, "element")?, &family).map_err(|e| bad("element")(e.to_string()))?;
            Ok(extract_wxi(&v).map_err(failed)?.to_string())
        }
        "hom-dim" => {
            let p = parse_polynomial(input(cx, "p")?).map_err(|e| bad("p")(e.to_string()))?;
            let q = parse_polynomial(input(cx, "q")?).map_err(|e| bad("q")(e.to_string()))?;
            Ok(hom_space(&p, &q).map_err(failed)?.dimension.to_string())
        }
        "surjective" => {
            let r = parse_polynomial(input(cx, "r")?).map_err(|e| bad("r")(e.to_string()))?;
            let q = parse_polynomial(input(cx, "q")?).map_err(|e| bad("q")(e.to_string()))?;
            Ok(is_surjective_hom(&r, &q).map_err(failed)?.to_string())
        }
        "annihilator" => {
            let family = family(cx)?;
            let v = parse_element(input(cx, "element")?, &family).map_err(|e| bad("element")(e.to_string()))?;
            Ok(annihilator_in_z(&v).map_err(failed)?.to_string())
        }
        "psi-decompose" | "validate" => {
            let module = text::read_nplus(input(cx, "module")?).map_err(|e| bad("module")(e.to_string()))?;
            if cx.operation == "validate" {
                return Ok(module.validate().to_string());
            }
            let blocks = psi_decompose(&module).map_err(failed)?;
            Ok(blocks.iter().map(|b| format!("{}:{}", b.functional, b.dim())).collect::<Vec<_>>().join(" "))
        }
        other => Err(ReplayError::UnknownOperation(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{run_all, SuiteConfig};

    #[test]
    fn recorded_failures_reproduce() {
        let cfg = SuiteConfig {
            cases: 2,
            action_bound: 2,
            direct_sum_bound: 2,
            rules: BracketRules::Corrupted,
            ..SuiteConfig::default()
        };
        let report = run_all(&cfg);
        assert!(report.total_failures() > 0);
        for (property, cx) in report.counterexamples() {
            let again = replay(cx).unwrap_or_else(|e| panic!("{}: {e}", property.name));
            assert_eq!(again, cx.actual, "{} / {}", property.name, cx.operation);
        }
    }

    #[test]
    fn unknown_operation() {
        let cx = Counterexample::new("frobnicate", &[], "", "");
        assert!(matches!(replay(&cx), Err(ReplayError::UnknownOperation(_))));
    }

    #[test]
    fn hom_and_surjective() {
        let cx = Counterexample::new("hom-dim", &[("p", "(z-1)^2".into()), ("q", "(z-1)*(z+2)".into())], "", "");
        assert_eq!(replay(&cx).unwrap(), "1");
        let cx = Counterexample::new("surjective", &[("r", "z+2".into()), ("q", "(z-1)^3".into())], "", "");
        assert_eq!(replay(&cx).unwrap(), "true");
    }
}
