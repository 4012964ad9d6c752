//! The expansion lemmas for `M(0,ξ)`: where `d_n d_{−λ} w_j` and
//! `d_μ d_{−λ} w_j` can have support, and which distinguished
//! coefficients are nonzero.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::config::SuiteConfig;
use super::report::{Counterexample, PropertyReport, SuiteReport};
use crate::algebra::{Partition, UeaElement};
use crate::modules::{act, BasisIndex, ModuleElement, ModuleFamily};
use crate::text::family_to_json;

const SUITE: &str = "lemmas";

/// Membership in `{d_{−γ}w_j : #γ ≤ #λ} ∪ {d_{−γ}w_{j+1} : #γ < #λ−1} ∪
/// {d_{−λ̂}w_{j+1} : λ̂ = λ minus one part}`.
pub fn in_single_mode_support(lambda: &Partition, j: u32, term: &BasisIndex) -> bool {
    let (len, g) = (lambda.len(), term.lambda.len());
    if term.j == j {
        return g <= len;
    }
    if term.j == j + 1 {
        return g + 1 < len || lambda.distinct_parts().iter().any(|&p| lambda.without(p).as_ref() == Some(&term.lambda));
    }
    false
}

/// Membership in the lemma's set for `d_μ`, read literally:
/// `{d_{−γ}w_j : #γ ≤ #λ} ∪ {d_{−γ}w_{j+k} : 0 < k ≤ #μ, #γ < #λ − k} ∪
/// {d_{−(λ−μ)}w_{j+#μ}}`.
pub fn in_mu_support_literal(lambda: &Partition, mu: &Partition, j: u32, term: &BasisIndex) -> bool {
    let (len, g) = (lambda.len(), term.lambda.len());
    if term.j == j {
        return g <= len;
    }
    if term.j < j {
        return false;
    }
    let k = (term.j - j) as usize;
    if k > mu.len() {
        return false;
    }
    let difference_term = k == mu.len() && lambda.diff(mu).as_ref() == Some(&term.lambda);
    g + k < len || difference_term
}

/// The bound that actually holds: terms at `w_{j+k}` have `#γ ≤ #λ − k`, and
/// at `k = #μ` equality only for `γ = λ − μ`.
pub fn in_mu_support_bound(lambda: &Partition, mu: &Partition, j: u32, term: &BasisIndex) -> bool {
    let (len, g) = (lambda.len(), term.lambda.len());
    if term.j < j {
        return false;
    }
    let k = (term.j - j) as usize;
    if k > mu.len() || g + k > len {
        return false;
    }
    k < mu.len() || k == 0 || g + k < len || lambda.diff(mu).as_ref() == Some(&term.lambda)
}

fn mu_expr(mu: &Partition) -> String {
    if mu.is_empty() {
        return "1".to_string();
    }
    mu.parts().iter().map(|p| format!("d({p})")).collect::<Vec<_>>().join("*")
}

struct Reports {
    single_support: PropertyReport,
    single_coefficient: PropertyReport,
    mu_support: PropertyReport,
    mu_coefficient: PropertyReport,
    mu_bound: PropertyReport,
}

pub fn verify_expansion_lemmas(cfg: &SuiteConfig) -> SuiteReport {
    if !cfg.enabled() {
        return SuiteReport::default();
    }
    let mut r = Reports {
        single_support: PropertyReport::new(SUITE, "single-mode-support"),
        single_coefficient: PropertyReport::new(SUITE, "single-mode-coefficient"),
        mu_support: PropertyReport::new(SUITE, "mu-support-as-stated"),
        mu_coefficient: PropertyReport::new(SUITE, "mu-coefficient"),
        mu_bound: PropertyReport::new(SUITE, "mu-support-bound"),
    };
    let mut mus = Partition::bounded(cfg.mu_length_bound, cfg.mode_bound);
    mus.sort_by_key(Partition::len);
    let start = std::time::Instant::now();
    for xi in &cfg.xis {
        let family = Arc::new(ModuleFamily::universal(xi.clone()));
        let family_json = family_to_json(&family).to_string();
        for lambda in Partition::up_to_size(cfg.partition_bound) {
            for j in 0..=cfg.j_bound {
                let v = ModuleElement::basis(&family, BasisIndex::new(lambda.clone(), j, 0)).expect("valid index");
                let cx = |mu: &Partition, expected: String, got: &ModuleElement| {
                    Counterexample::new(
                        "act",
                        &[
                            ("family", family_json.clone()),
                            ("expr", mu_expr(mu)),
                            ("element", v.to_string()),
                            ("bracket", "virasoro".to_string()),
                        ],
                        expected,
                        got,
                    )
                };
                // d_μ v = d_{μ_1}(d_{μ_2 ⋯ μ_r} v), reusing the shorter results
                let mut results: BTreeMap<Partition, ModuleElement> = BTreeMap::new();
                for mu in &mus {
                    let got = match mu.parts().split_first() {
                        None => v.clone(),
                        Some((&first, rest)) => {
                            let tail = Partition::new(rest.to_vec()).expect("positive parts");
                            act(&UeaElement::d(i64::from(first)), &results[&tail])
                        }
                    };
                    check_mu(&mut r, &lambda, mu, j, &got, &cx);
                    if mu.len() == 1 {
                        check_single(&mut r, &lambda, mu.parts()[0], j, &got, &cx);
                    }
                    results.insert(mu.clone(), got);
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let mut properties = vec![r.single_support, r.single_coefficient, r.mu_support, r.mu_coefficient, r.mu_bound];
    for p in &mut properties {
        p.elapsed = elapsed / 5;
    }
    SuiteReport { properties }
}

fn offending(got: &ModuleElement, ok: impl Fn(&BasisIndex) -> bool) -> Vec<String> {
    got.terms().keys().filter(|t| !ok(t)).map(|t| t.to_string()).collect()
}

fn check_single(
    r: &mut Reports,
    lambda: &Partition,
    n: u32,
    j: u32,
    got: &ModuleElement,
    cx: &impl Fn(&Partition, String, &ModuleElement) -> Counterexample,
) {
    let mu = Partition::new(vec![n]).expect("positive");
    let bad = offending(got, |t| in_single_mode_support(lambda, j, t));
    r.single_support.check(bad.is_empty(), || {
        cx(&mu, format!("support within the single-mode set; outside: {}", bad.join(", ")), got)
    });
    for p in lambda.distinct_parts() {
        let hat = lambda.without(p).expect("p is a part");
        let coeff = got.coefficient(&BasisIndex::new(hat.clone(), j + 1, 0));
        let ok = coeff.is_zero() != (p == n);
        r.single_coefficient.check(ok, || {
            let want = if p == n { "nonzero" } else { "zero" };
            cx(&mu, format!("coefficient of d_-{hat} w_{} {want}", j + 1), got)
        });
    }
}

fn check_mu(
    r: &mut Reports,
    lambda: &Partition,
    mu: &Partition,
    j: u32,
    got: &ModuleElement,
    cx: &impl Fn(&Partition, String, &ModuleElement) -> Counterexample,
) {
    let bad = offending(got, |t| in_mu_support_literal(lambda, mu, j, t));
    r.mu_support.check(bad.is_empty(), || {
        cx(mu, format!("support within the stated set; outside: {}", bad.join(", ")), got)
    });
    let bad = offending(got, |t| in_mu_support_bound(lambda, mu, j, t));
    r.mu_bound.check(bad.is_empty(), || {
        cx(mu, format!("terms at w_(j+k) with #gamma <= #lambda - k; outside: {}", bad.join(", ")), got)
    });
    let top = j + mu.len() as u32;
    let ok = match lambda.diff(mu) {
        Some(diff) => !got.coefficient(&BasisIndex::new(diff, top, 0)).is_zero(),
        None => got
            .terms()
            .keys()
            .all(|t| t.j != top || t.lambda.len() + mu.len() < lambda.len()),
    };
    r.mu_coefficient.check(ok, || {
        let want = match lambda.diff(mu) {
            Some(diff) => format!("nonzero coefficient of d_-{diff} w_{top}"),
            None => format!("no distinguished term at w_{top} (lambda - mu undefined)"),
        };
        cx(mu, want, got)
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn d_word(mu: &Partition) -> UeaElement {
        mu.parts().iter().fold(UeaElement::one(), |acc, &p| &acc * &UeaElement::d(i64::from(p)))
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stated_mu_support_misses_a_term() {
        let family = Arc::new(ModuleFamily::universal(int(0)));
        let v = ModuleElement::basis(&family, BasisIndex::new(p(&[3]), 0, 0)).unwrap();
        let got = act(&d_word(&p(&[1, 2])), &v);
        let w1 = BasisIndex::new(Partition::empty(), 1, 0);
        assert_eq!(got, ModuleElement::from_terms(&family, [(w1.clone(), int(10))]).unwrap());
        assert!(!in_mu_support_literal(&p(&[3]), &p(&[1, 2]), 0, &w1));
        assert!(in_mu_support_bound(&p(&[3]), &p(&[1, 2]), 0, &w1));
    }

    #[test]
    fn single_mode_sets() {
        let lambda = p(&[1, 2, 2]);
        assert!(in_single_mode_support(&lambda, 0, &BasisIndex::new(p(&[1, 2]), 1, 0)));
        assert!(in_single_mode_support(&lambda, 0, &BasisIndex::new(p(&[5]), 1, 0)));
        assert!(!in_single_mode_support(&lambda, 0, &BasisIndex::new(p(&[1, 3]), 1, 0)));
        assert!(!in_single_mode_support(&lambda, 1, &BasisIndex::new(Partition::empty(), 0, 0)));
    }

    #[test]
    fn small_campaign() {
        let cfg = SuiteConfig { partition_bound: 4, mode_bound: 4, mu_length_bound: 2, j_bound: 1, ..SuiteConfig::default() };
        let report = verify_expansion_lemmas(&cfg);
        for name in ["single-mode-support", "single-mode-coefficient", "mu-coefficient", "mu-support-bound"] {
            let prop = report.property(name).unwrap();
            assert!(prop.passed(), "{}", report.to_text(false));
            assert!(prop.cases > 0);
        }
        assert!(report.property("mu-support-as-stated").unwrap().failures > 0);
    }
}
