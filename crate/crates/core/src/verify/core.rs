use std::sync::Arc;

use num_integer::binomial;
use num_traits::Zero;

use super::config::SuiteConfig;
use super::random::Sampler;
use super::report::{Counterexample, PropertyReport, SuiteReport};
use super::timed;
use crate::algebra::rational::{frac, int, pow};
use crate::algebra::{normal_order_with, Generator, Partition, PbwMonomial, Rational, UeaElement};
use crate::modules::{act, BasisIndex, ModuleElement, ModuleFamily, WhittakerFunctional};
use crate::text::{family_to_json, parse_expression};

const SUITE: &str = "core";

fn evaluate(cfg: &SuiteConfig, expr: &str) -> UeaElement {
    parse_expression(expr).expect("generated expressions parse").evaluate_with(&cfg.rules)
}

fn evaluate_cx(cfg: &SuiteConfig, expr: &str, expected: impl ToString, actual: &UeaElement) -> Counterexample {
    Counterexample::new(
        "evaluate",
        &[("expr", expr.to_string()), ("bracket", cfg.rules.name().to_string())],
        expected,
        actual,
    )
}

/// `(k−j)d_{k+j} + δ_{j,−k}(k³−k)/12·z`, assembled directly from the formula.
pub(crate) fn bracket_formula(k: i64, j: i64) -> UeaElement {
    let mut out = UeaElement::d(k + j).scale(&int(k - j));
    if j == -k {
        out = out + UeaElement::z().scale(&frac(k * k * k - k, 12));
    }
    out
}

pub fn verify_core_identities(cfg: &SuiteConfig) -> SuiteReport {
    if !cfg.enabled() {
        return SuiteReport::default();
    }
    SuiteReport {
        properties: vec![
            timed(|| pbw_stability(cfg)),
            timed(|| antisymmetry(cfg)),
            timed(|| jacobi(cfg)),
            timed(|| associativity(cfg)),
            timed(|| centrality(cfg)),
            timed(|| weight_homogeneity(cfg)),
            timed(|| d0_identity(cfg)),
        ],
    }
}

fn pbw_stability(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "pbw-stability");
    let bound = cfg.index_bound;
    let mut word: Vec<i64> = Vec::new();
    fn walk(cfg: &SuiteConfig, report: &mut PropertyReport, word: &mut Vec<i64>, lo: i64, bound: i64, len: usize) {
        let letters: Vec<Generator> = word.iter().map(|&k| Generator::D(k)).collect();
        let got = normal_order_with(&letters, &cfg.rules);
        let expected = UeaElement::term(PbwMonomial::from_sorted_letters(word, 0), int(1));
        let expr = if word.is_empty() {
            "1".to_string()
        } else {
            word.iter().map(|k| format!("d({k})")).collect::<Vec<_>>().join("*")
        };
        report.check(got == expected, || evaluate_cx(cfg, &expr, &expected, &got));
        if word.len() < len {
            for k in lo..=bound {
                word.push(k);
                walk(cfg, report, word, k, bound, len);
                word.pop();
            }
        }
    }
    walk(cfg, &mut report, &mut word, -bound, bound, cfg.word_length_bound);
    report
}

fn antisymmetry(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "antisymmetry");
    let b = cfg.index_bound;
    for i in -b..=b {
        for j in -b..=b {
            let expr = format!("d({i})*d({j}) - d({j})*d({i})");
            let got = evaluate(cfg, &expr);
            let expected = bracket_formula(i, j);
            report.check(got == expected, || evaluate_cx(cfg, &expr, &expected, &got));
        }
    }
    report
}

pub(crate) fn jacobi_expression(i: i64, j: i64, k: i64) -> String {
    let br = |a: String, b: String| format!("({a})*({b}) - ({b})*({a})");
    let d = |x: i64| format!("d({x})");
    [
        br(d(i), br(d(j), d(k))),
        br(d(j), br(d(k), d(i))),
        br(d(k), br(d(i), d(j))),
    ]
    .map(|t| format!("({t})"))
    .join(" + ")
}

fn jacobi(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "jacobi");
    let b = cfg.jacobi_bound;
    for i in -b..=b {
        for j in -b..=b {
            for k in -b..=b {
                let expr = jacobi_expression(i, j, k);
                let got = evaluate(cfg, &expr);
                report.check(got.is_zero(), || evaluate_cx(cfg, &expr, "0", &got));
            }
        }
    }
    report
}

fn associativity(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "associativity");
    let mut rng = Sampler::new(cfg.seed, "associativity");
    for _ in 0..cfg.product_cases {
        let [u, v, w] = [(); 3].map(|_| rng.uea_text(4, 3, cfg.index_bound, true));
        let expr = format!("(({u})*({v}))*({w}) - ({u})*(({v})*({w}))");
        let got = evaluate(cfg, &expr);
        report.check(got.is_zero(), || evaluate_cx(cfg, &expr, "0", &got));
    }
    report
}

fn centrality(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "centrality");
    let mut rng = Sampler::new(cfg.seed, "centrality");
    for _ in 0..cfg.product_cases {
        let u = rng.uea_text(4, 3, cfg.index_bound, true);
        let expr = format!("(z + 1)*({u}) - ({u})*(z + 1)");
        let got = evaluate(cfg, &expr);
        report.check(got.is_zero(), || evaluate_cx(cfg, &expr, "0", &got));
    }
    report
}

fn weight_homogeneity(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "weight-homogeneity");
    let mut rng = Sampler::new(cfg.seed, "weight-homogeneity");
    for _ in 0..cfg.product_cases {
        let (u, wu) = rng.word_text(3, cfg.index_bound);
        let (v, wv) = rng.word_text(3, cfg.index_bound);
        let expr = format!("({u})*({v})");
        let got = evaluate(cfg, &expr);
        let ok = got.terms().keys().all(|m| m.weight() == wu + wv);
        report.check(ok, || evaluate_cx(cfg, &expr, format!("every monomial of weight {}", wu + wv), &got));
    }
    report
}

/// `ψ_i((d_0+i)^k − d_0^k)w = ψ_i Σ_{m<k} C(k,m) i^{k−m} d_0^m w`, written
/// directly in the basis `d_0^m w` of `L(ψ,ξ)`.
fn d0_identity_rhs(family: &Arc<ModuleFamily>, psi: &WhittakerFunctional, i: i64, k: u32) -> ModuleElement {
    let psi_i = psi.value(i);
    let terms = (0..k).map(|m| {
        let c = &psi_i * Rational::from_integer(binomial(i64::from(k), i64::from(m)).into()) * pow(&int(i), k - m);
        (BasisIndex::new(Partition::empty(), m, 0), c)
    });
    ModuleElement::from_terms(family, terms).expect("valid indices")
}

fn d0_identity(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "d0-power-identity");
    let xi = cfg.xis.first().cloned().unwrap_or_else(Rational::zero);
    for psi in cfg.psis.iter().filter(|p| !p.is_zero()) {
        let family = Arc::new(ModuleFamily::whittaker(psi.clone(), xi.clone()).expect("nonzero functional"));
        let w = ModuleElement::generator(&family, 0).expect("generator");
        for i in 1..=cfg.d0_index_bound {
            for k in 0..=cfg.d0_power_bound {
                let expr = format!("d({i})*d(0)^{k} - d(0)^{k}*d({i})");
                let u = evaluate(cfg, &expr);
                let got = act(&u, &w);
                let expected = d0_identity_rhs(&family, psi, i, k);
                report.check(got == expected, || {
                    Counterexample::new(
                        "act",
                        &[
                            ("family", family_to_json(&family).to_string()),
                            ("expr", expr.clone()),
                            ("element", "w".to_string()),
                            ("bracket", cfg.rules.name().to_string()),
                        ],
                        &expected,
                        &got,
                    )
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::config::BracketRules;

    fn small() -> SuiteConfig {
        SuiteConfig { index_bound: 3, word_length_bound: 3, jacobi_bound: 2, product_cases: 5, d0_index_bound: 3, d0_power_bound: 3, ..SuiteConfig::default() }
    }

    #[test]
    fn core_identities_hold() {
        let report = verify_core_identities(&small());
        assert!(report.passed(), "{}", report.to_text(false));
        assert!(report.total_cases() > 0);
    }

    #[test]
    fn corrupted_bracket_breaks_jacobi() {
        let cfg = SuiteConfig { rules: BracketRules::Corrupted, ..small() };
        let report = verify_core_identities(&cfg);
        assert!(report.property("jacobi").unwrap().failures > 0);
    }

    #[test]
    fn d0_identity_examples() {
        let psi = WhittakerFunctional::new(int(1), int(0));
        let family = Arc::new(ModuleFamily::whittaker(psi.clone(), int(0)).unwrap());
        let w = ModuleElement::generator(&family, 0).unwrap();
        let lhs = act(&parse_expression("d(1)*d(0)^2 - d(0)^2*d(1)").unwrap().evaluate(), &w);
        let d0w = act(&UeaElement::d(0), &w);
        assert_eq!(lhs, &d0w.scale(&int(2)) + &w);
        assert!(d0_identity_rhs(&family, &psi, 3, 0).is_zero());
        let psi = WhittakerFunctional::new(int(1), int(5));
        assert_eq!(d0_identity_rhs(&family, &psi, 2, 1), w.scale(&int(10)));
    }

    #[test]
    fn empty_config_runs_nothing() {
        assert_eq!(verify_core_identities(&SuiteConfig::empty()), SuiteReport::default());
    }
}
