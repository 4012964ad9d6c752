//! Compatibility of the module actions with the algebra, the filtration
//! contract on basis vectors, and the flag and block structure of
//! `n⁺`-modules.

use std::sync::Arc;

use num_traits::Zero;

use super::config::SuiteConfig;
use super::core::bracket_formula;
use super::random::Sampler;
use super::report::{Counterexample, PropertyReport, SuiteReport};
use super::timed;
use crate::algebra::rational::int;
use crate::algebra::{Rational, UeaElement};
use crate::modules::{
    act_with, enumerate_basis, psi_decompose, BasisIndex, Matrix, ModuleElement, ModuleFamily, NPlusModule,
    WhittakerFunctional,
};
use crate::text::{family_to_json, nplus_to_json, parse_expression};

const SUITE: &str = "actions";

/// One family of each kind, with parameters drawn from the configuration.
fn families(rng: &mut Sampler, cfg: &SuiteConfig) -> Vec<Arc<ModuleFamily>> {
    let xi = rng.pick(&cfg.xis).clone();
    let psi = rng.pick(&cfg.psis).clone();
    let n = 2 + rng.below(2);
    let members: Vec<bool> = (0..n - 1).map(|_| rng.below(2) == 0).collect();
    let module = rng.nplus(&xi, &psi, &members);
    let other = rng.pick(&cfg.xis).clone();
    let mut out = vec![
        ModuleFamily::universal(xi.clone()),
        ModuleFamily::verma(xi.clone(), rng.grid()),
        ModuleFamily::induced(module).expect("sampled modules are valid"),
    ];
    if !psi.is_zero() {
        out.push(ModuleFamily::whittaker(psi.clone(), xi.clone()).expect("nonzero functional"));
        out.push(ModuleFamily::direct_sum(vec![(psi.clone(), xi), (psi, other)]).expect("nonzero functional"));
    }
    out.into_iter().map(Arc::new).collect()
}

fn act_cx(cfg: &SuiteConfig, family: &ModuleFamily, expr: &str, m: &ModuleElement, expected: impl ToString, actual: &ModuleElement) -> Counterexample {
    Counterexample::new(
        "act",
        &[
            ("family", family_to_json(family).to_string()),
            ("expr", expr.to_string()),
            ("element", m.to_string()),
            ("bracket", cfg.rules.name().to_string()),
        ],
        expected,
        actual,
    )
}

pub fn verify_module_actions(cfg: &SuiteConfig) -> SuiteReport {
    if !cfg.enabled() {
        return SuiteReport::default();
    }
    SuiteReport {
        properties: vec![
            timed(|| action_compatibility(cfg)),
            timed(|| bracket_compatibility(cfg)),
            timed(|| filtration_contract(cfg)),
            timed(|| flag_form(cfg)),
            timed(|| block_decomposition(cfg)),
        ],
    }
}

fn action_compatibility(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "action-compatibility");
    let mut rng = Sampler::new(cfg.seed, "action-compatibility");
    for _ in 0..cfg.cases {
        for family in families(&mut rng, cfg) {
            let u_text = rng.uea_text(2, 2, cfg.action_bound, true);
            let v_text = rng.uea_text(2, 2, cfg.action_bound, true);
            let expr = format!("({u_text})*({v_text})");
            let u = parse_expression(&u_text).expect("generated expressions parse").evaluate_with(&cfg.rules);
            let v = parse_expression(&v_text).expect("generated expressions parse").evaluate_with(&cfg.rules);
            let m = rng.module_element(&family, 2, 3);
            let got = act_with(&cfg.rules, &u.multiply_with(&v, &cfg.rules), &m);
            let expected = act_with(&cfg.rules, &u, &act_with(&cfg.rules, &v, &m));
            report.check(got == expected, || act_cx(cfg, &family, &expr, &m, &expected, &got));
        }
    }
    report
}

fn bracket_compatibility(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "bracket-compatibility");
    let mut rng = Sampler::new(cfg.seed, "bracket-compatibility");
    let b = cfg.action_bound;
    for _ in 0..cfg.cases.div_ceil(4) {
        for family in families(&mut rng, cfg) {
            let m = rng.module_element(&family, 2, 3);
            for k in -b..=b {
                for j in -b..k {
                    let dk = UeaElement::d(k);
                    let dj = UeaElement::d(j);
                    let got = &act_with(&cfg.rules, &dk, &act_with(&cfg.rules, &dj, &m))
                        - &act_with(&cfg.rules, &dj, &act_with(&cfg.rules, &dk, &m));
                    let expected = act_with(&cfg.rules, &bracket_formula(k, j), &m);
                    report.check(got == expected, || {
                        act_cx(cfg, &family, &format!("d({k})*d({j}) - d({j})*d({k})"), &m, &expected, &got)
                    });
                }
            }
        }
    }
    report
}

/// `d_1` never raises `F`; `d_2 − ψ_2` lowers `F`, or keeps `(λ, j)` and
/// moves to a lower component.
pub(crate) fn respects_filtration(b: &BasisIndex, d1_image: &ModuleElement, d2_shifted: &ModuleElement) -> bool {
    let f = b.filtration();
    d1_image.terms().keys().all(|t| t.filtration() <= f)
        && d2_shifted
            .terms()
            .keys()
            .all(|t| t.filtration() < f || (t.lambda == b.lambda && t.j == b.j && t.component < b.component))
}

fn filtration_contract(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "filtration-contract");
    let mut rng = Sampler::new(cfg.seed, "filtration-contract");
    for _ in 0..cfg.cases.div_ceil(4) {
        for family in families(&mut rng, cfg) {
            for index in enumerate_basis(&family, 3) {
                let v = ModuleElement::basis(&family, index.clone()).expect("enumerated index");
                let psi2 = family.functional(index.component).unwrap_or_else(WhittakerFunctional::zero).psi2;
                let d1 = act_with(&cfg.rules, &UeaElement::d(1), &v);
                let d2 = &act_with(&cfg.rules, &UeaElement::d(2), &v) - &v.scale(&psi2);
                report.check(respects_filtration(&index, &d1, &d2), || {
                    act_cx(cfg, &family, &format!("d(2) - ({psi2})"), &v, format!("F < {} or a lower component", index.filtration()), &d2)
                });
            }
        }
    }
    report
}

fn validate_cx(module: &NPlusModule, expected: impl ToString, actual: impl ToString) -> Counterexample {
    Counterexample::new("validate", &[("module", nplus_to_json(module).to_string())], expected, actual)
}

fn flag_form(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "flag-form");
    let mut rng = Sampler::new(cfg.seed, "flag-form");
    for case in 0..cfg.cases {
        let n = 2 + case % 2;
        let psi = rng.pick(&cfg.psis).clone();
        let xi = rng.pick(&cfg.xis).clone();
        let members: Vec<bool> = (0..n - 1).map(|_| rng.below(2) == 0).collect();
        let module = rng.nplus(&xi, &psi, &members);
        let shape = (1..=2 * n + 2).all(|k| {
            let m = module.action(k);
            let diagonal = psi.value(k as i64);
            m.is_upper_triangular() && (0..n).all(|i| m[(i, i)] == diagonal)
        });
        report.check(shape && module.validate().is_valid(), || {
            validate_cx(&module, "valid, with upper-triangular D_k and diagonal psi_k", module.validate())
        });
        let blocks = psi_decompose(&module);
        let single = matches!(&blocks, Ok(b) if b.len() == 1 && b[0].functional == psi && b[0].dim() == n);
        report.check(single, || {
            Counterexample::new(
                "psi-decompose",
                &[("module", nplus_to_json(&module).to_string())],
                format!("{psi}:{n}"),
                match &blocks {
                    Ok(b) => block_text(b.iter().map(|b| (&b.functional, b.dim()))),
                    Err(e) => e.to_string(),
                },
            )
        });
    }
    report
}

fn block_text<'a>(blocks: impl Iterator<Item = (&'a WhittakerFunctional, usize)>) -> String {
    blocks.map(|(psi, d)| format!("{psi}:{d}")).collect::<Vec<_>>().join(" ")
}

/// `(I + N)^{-1} = Σ (−N)^k` for nilpotent `N`.
fn unipotent_inverse(nilpotent: &Matrix) -> Matrix {
    let n = nilpotent.dim();
    let minus = nilpotent.scale(&int(-1));
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for _ in 1..n {
        term = &term * &minus;
        sum = &sum + &term;
    }
    sum
}

fn random_nilpotent(rng: &mut Sampler, n: usize, upper: bool) -> Matrix {
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let (r, c) = if upper { (i, j) } else { (j, i) };
            m[(r, c)] = rng.grid();
        }
    }
    m
}

fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.dim()).sum();
    let mut out = Matrix::zeros(n);
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                out[(offset + i, offset + j)] = b[(i, j)].clone();
            }
        }
        offset += b.dim();
    }
    out
}

fn annihilated(m: &Matrix, c: &Rational, exp: u32, v: &[Rational]) -> bool {
    let shifted = (m - &Matrix::scalar(m.dim(), c)).pow(exp);
    shifted.apply(v).iter().all(Zero::is_zero)
}

/// Block-diagonal modules with distinct functionals, conjugated by a random
/// invertible matrix, must split back into blocks of the original sizes.
fn block_decomposition(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "psi-decompose-blocks");
    let mut rng = Sampler::new(cfg.seed, "psi-decompose-blocks");
    for _ in 0..cfg.cases {
        let xi = rng.pick(&cfg.xis).clone();
        let count = 2 + rng.below(2);
        let mut parts: Vec<(WhittakerFunctional, NPlusModule)> = Vec::new();
        while parts.len() < count {
            let psi = WhittakerFunctional::new(rng.grid(), rng.grid());
            if parts.iter().any(|(p, _)| *p == psi) {
                continue;
            }
            let size = 1 + rng.below(2);
            let members: Vec<bool> = (0..size - 1).map(|_| rng.below(2) == 0).collect();
            let module = rng.nplus(&xi, &psi, &members);
            parts.push((psi, module));
        }
        parts.sort_by(|a, b| (&a.0.psi1, &a.0.psi2).cmp(&(&b.0.psi1, &b.0.psi2)));
        let d1 = block_diagonal(&parts.iter().map(|(_, m)| m.d1()).collect::<Vec<_>>());
        let d2 = block_diagonal(&parts.iter().map(|(_, m)| m.d2()).collect::<Vec<_>>());
        let n = d1.dim();

        let lower = random_nilpotent(&mut rng, n, false);
        let upper = random_nilpotent(&mut rng, n, true);
        let id = Matrix::identity(n);
        let p = &(&id + &lower) * &(&id + &upper);
        let p_inv = &unipotent_inverse(&upper) * &unipotent_inverse(&lower);
        debug_assert_eq!(&p * &p_inv, id);
        let conj = |m: &Matrix| &(&p * m) * &p_inv;
        let module = NPlusModule::new(xi, conj(&d1), conj(&d2)).expect("square matrices of equal size");

        let expected = block_text(parts.iter().map(|(psi, m)| (psi, m.dim())));
        let blocks = psi_decompose(&module);
        let ok = match &blocks {
            Ok(blocks) => {
                block_text(blocks.iter().map(|b| (&b.functional, b.dim()))) == expected
                    && blocks.iter().all(|b| {
                        b.basis.iter().all(|v| {
                            annihilated(module.d1(), &b.functional.psi1, n as u32, v)
                                && annihilated(module.d2(), &b.functional.psi2, n as u32, v)
                                && !v.iter().all(Zero::is_zero)
                        })
                    })
            }
            Err(_) => false,
        };
        report.check(ok, || {
            Counterexample::new(
                "psi-decompose",
                &[("module", nplus_to_json(&module).to_string())],
                &expected,
                match &blocks {
                    Ok(b) => block_text(b.iter().map(|b| (&b.functional, b.dim()))),
                    Err(e) => e.to_string(),
                },
            )
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use crate::verify::BracketRules;

    fn small() -> SuiteConfig {
        SuiteConfig { cases: 2, action_bound: 2, ..SuiteConfig::default() }
    }

    #[test]
    fn small_campaign_passes() {
        let report = verify_module_actions(&small());
        assert!(report.passed(), "{}", report.to_text(false));
    }

    #[test]
    fn corrupted_bracket_breaks_compatibility() {
        let cfg = SuiteConfig { rules: BracketRules::Corrupted, ..small() };
        let report = verify_module_actions(&cfg);
        assert!(report.property("bracket-compatibility").is_some_and(|p| p.failures > 0));
    }

    #[test]
    fn neumann_inverse() {
        let mut n = Matrix::zeros(3);
        n[(0, 1)] = int(2);
        n[(1, 2)] = frac(-1, 2);
        n[(0, 2)] = int(5);
        let id = Matrix::identity(3);
        assert_eq!(&(&id + &n) * &unipotent_inverse(&n), id);
    }
}
