//! Dimension predictions and bounds for Whittaker vectors, Hom spaces,
//! central decompositions, the `W_ξ` extraction and the lowest-weight
//! singular vector.

use std::sync::Arc;

use num_traits::Zero;

use super::config::SuiteConfig;
use super::random::Sampler;
use super::report::{Counterexample, PropertyReport, SuiteReport};
use super::timed;
use crate::algebra::rational::{frac, int};
use crate::algebra::{CentralPolynomial, Partition, Rational, UeaElement};
use crate::modules::{act, BasisIndex, ModuleElement, ModuleFamily, NPlusModule, WhittakerFunctional};
use crate::text::family_to_json;
use crate::whittaker::{
    annihilator_in_z, central_decomposition, decompose_alpha, extract_wxi, extract_wxi_choice, hom_space,
    in_line_ipsi, is_surjective_hom, level_sweep, structure_predicates, whittaker_vectors,
};
use crate::whittaker::solver::{is_whittaker_for, lowest_coefficient_is_one};

const SUITE: &str = "theorems";

fn psi_text(psi: &WhittakerFunctional) -> String {
    format!("{},{}", psi.psi1, psi.psi2)
}

fn dim_cx(family: &Arc<ModuleFamily>, psi: &WhittakerFunctional, level: u32, expected: String, actual: usize) -> Counterexample {
    Counterexample::new(
        "whittaker-dim",
        &[
            ("family", family_to_json(family).to_string()),
            ("psi", psi_text(psi)),
            ("level", level.to_string()),
        ],
        expected,
        actual,
    )
}

struct Sample {
    family: Arc<ModuleFamily>,
    module: NPlusModule,
    level: u32,
    dim: usize,
    vectors: Vec<ModuleElement>,
}

fn sample(rng: &mut Sampler, cfg: &SuiteConfig, n: usize, psi2_zero: bool, members: Option<&[bool]>) -> Sample {
    let psi = rng.functional_with_psi2(psi2_zero);
    let xi = rng.pick(&cfg.xis).clone();
    let mask: Vec<bool> = match members {
        Some(m) => m.to_vec(),
        None => vec![false; n - 1],
    };
    let module = rng.nplus(&xi, &psi, &mask);
    let family = Arc::new(ModuleFamily::induced(module.clone()).expect("sampled modules are valid"));
    let level = n as u32 + 3;
    let vectors = whittaker_vectors(&family, &psi, level).expect("nonzero functional").vectors;
    Sample { family, module, level, dim: vectors.len(), vectors }
}

pub fn verify_whittaker_theorems(cfg: &SuiteConfig) -> SuiteReport {
    if !cfg.enabled() {
        return SuiteReport::default();
    }
    let mut samples = Vec::new();
    let mut properties = vec![
        timed(|| uniserial(cfg, 2, cfg.cases, &mut samples)),
        timed(|| uniserial(cfg, 3, cfg.cases.div_ceil(2), &mut samples)),
        timed(|| member_bound(cfg, &mut samples)),
        timed(|| psi2_zero(cfg, &mut samples)),
    ];
    properties.push(timed(|| length_bound(&samples)));
    properties.push(timed(|| annihilation(&samples)));
    properties.push(timed(|| structure(&samples)));
    properties.push(timed(|| level_monotonicity(cfg)));
    properties.extend(direct_sums(cfg));
    properties.push(timed(|| hom_formula(cfg)));
    properties.push(timed(|| surjectivity(cfg)));
    properties.push(timed(|| decomposition_lengths(cfg)));
    properties.push(timed(|| extraction(cfg)));
    properties.push(timed(|| singular_vector(cfg)));
    SuiteReport { properties }
}

fn uniserial(cfg: &SuiteConfig, n: usize, cases: usize, samples: &mut Vec<Sample>) -> PropertyReport {
    let name = format!("uniserial-n{n}");
    let mut report = PropertyReport::new(SUITE, &name);
    let mut rng = Sampler::new(cfg.seed, &name);
    for _ in 0..cases {
        let s = sample(&mut rng, cfg, n, false, None);
        let psi = s.module.psi();
        report.check(s.dim == 1, || dim_cx(&s.family, &psi, s.level, "1".into(), s.dim));
        samples.push(s);
    }
    report
}

fn member_bound(cfg: &SuiteConfig, samples: &mut Vec<Sample>) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "superdiagonal-member-bound");
    let mut rng = Sampler::new(cfg.seed, "superdiagonal-member-bound");
    for case in 0..cfg.cases.div_ceil(2) {
        let n = 2 + case % 2;
        let mut mask: Vec<bool> = (0..n - 1).map(|_| rng.below(2) == 0).collect();
        if !mask.contains(&true) {
            let k = rng.below(n - 1);
            mask[k] = true;
        }
        let s = sample(&mut rng, cfg, n, false, Some(&mask));
        let psi = s.module.psi();
        let w = s.module.superdiagonal().iter().filter(|a| in_line_ipsi(a, &psi)).count();
        let ok = s.dim >= 2 && s.dim <= w + 1;
        report.check(ok, || dim_cx(&s.family, &psi, s.level, format!("between 2 and |W| + 1 = {}", w + 1), s.dim));
        samples.push(s);
    }
    report
}

/// `v_2 − c_0(d_0²v_1 − ψ_1 d_{−1}v_1) − c_1 d_0 v_1`
pub(crate) fn psi2_zero_second_vector(family: &Arc<ModuleFamily>, psi1: &Rational, c0: &Rational, c1: &Rational) -> ModuleElement {
    let e = |parts: &[u32], j: u32, c: usize| {
        BasisIndex::new(Partition::new(parts.to_vec()).expect("positive parts"), j, c)
    };
    let terms = [
        (e(&[], 0, 1), int(1)),
        (e(&[], 2, 0), -c0.clone()),
        (e(&[1], 0, 0), c0 * psi1),
        (e(&[], 1, 0), -c1.clone()),
    ];
    ModuleElement::from_terms(family, terms).expect("valid indices")
}

fn proportional(a: &ModuleElement, b: &ModuleElement) -> bool {
    let Some((index, ca)) = a.terms().iter().next() else {
        return b.is_zero();
    };
    let cb = b.coefficient(index);
    !cb.is_zero() && a.scale(&(cb / ca)) == *b
}

fn psi2_zero(cfg: &SuiteConfig, samples: &mut Vec<Sample>) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "psi2-zero-second-vector");
    let mut rng = Sampler::new(cfg.seed, "psi2-zero-second-vector");
    for _ in 0..cfg.cases {
        let member = rng_member(&mut rng);
        let s = sample(&mut rng, cfg, 2, true, Some(&[member]));
        let psi = s.module.psi();
        let basis = whittaker_vectors(&s.family, &psi, s.level).expect("nonzero functional");
        let (c0, c1) = decompose_alpha(&s.module.alpha(1, 2), &psi).expect("psi2 = 0 and psi1 != 0");
        let expected = psi2_zero_second_vector(&s.family, &psi.psi1, &c0, &c1);
        let ok = basis.dim() == 2 && proportional(&basis.vectors[1], &expected);
        report.check(ok, || {
            let actual = basis.vectors.get(1).map_or_else(|| format!("dim Wh = {}", basis.dim()), ToString::to_string);
            Counterexample::new(
                "whittaker-vector",
                &[
                    ("family", family_to_json(&s.family).to_string()),
                    ("psi", psi_text(&psi)),
                    ("level", s.level.to_string()),
                    ("index", "2".to_string()),
                ],
                format!("a multiple of {expected}"),
                actual,
            )
        });
        samples.push(s);
    }
    report
}

fn rng_member(rng: &mut Sampler) -> bool {
    rng.below(2) == 0
}

fn length_bound(samples: &[Sample]) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "whittaker-length-bound");
    for s in samples {
        let n = s.module.dim();
        let psi = s.module.psi();
        report.check((1..=n).contains(&s.dim), || dim_cx(&s.family, &psi, s.level, format!("between 1 and {n}"), s.dim));
    }
    report
}

/// Each basis vector is a Whittaker vector for `d_1, …, d_4` (the solver
/// only imposes `d_1` and `d_2`) and is normalized at its lowest index.
fn annihilation(samples: &[Sample]) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "whittaker-vectors-annihilated");
    for s in samples {
        let psi = s.module.psi();
        for (i, v) in s.vectors.iter().enumerate() {
            let ok = (1..=4).all(|k| is_whittaker_for(v, &psi, k)) && lowest_coefficient_is_one(v);
            report.check(ok, || {
                Counterexample::new(
                    "whittaker-vector",
                    &[
                        ("family", family_to_json(&s.family).to_string()),
                        ("psi", psi_text(&psi)),
                        ("level", s.level.to_string()),
                        ("index", (i + 1).to_string()),
                    ],
                    "a Whittaker vector with lowest coefficient 1",
                    v,
                )
            });
        }
    }
    report
}

fn structure(samples: &[Sample]) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "structure-predicates");
    for s in samples {
        let r = structure_predicates(&s.module, s.level).expect("valid module, nonzero functional");
        let psi = s.module.psi();
        let consistent = r.bound_ok
            && r.dim_wh == s.dim
            && (!r.is_uniserial_predicted || r.dim_wh == 1)
            && r.is_completely_reducible_predicted == (r.dim_wh == s.module.dim());
        report.check(consistent, || dim_cx(&s.family, &psi, s.level, format!("predicates consistent: {r:?}"), s.dim));
    }
    report
}

fn level_monotonicity(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "level-monotonicity");
    let mut rng = Sampler::new(cfg.seed, "level-monotonicity");
    for case in 0..cfg.cases.div_ceil(4) {
        let member = rng_member(&mut rng);
        let s = sample(&mut rng, cfg, 2, case % 2 == 0, Some(&[member]));
        let psi = s.module.psi();
        let sweep = level_sweep(&s.family, &psi, s.level).expect("nonzero functional");
        let ok = sweep.windows(2).all(|w| w[0].1 <= w[1].1);
        report.check(ok, || dim_cx(&s.family, &psi, s.level, format!("non-decreasing sweep {sweep:?}"), s.dim));
    }
    report
}

fn distinct_xis(cfg: &SuiteConfig, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    let mut extra = 0i64;
    for xi in cfg.xis.iter().cloned().chain(std::iter::from_fn(|| {
        extra += 1;
        Some(int(-extra))
    })) {
        if !out.contains(&xi) {
            out.push(xi);
        }
        if out.len() == k {
            break;
        }
    }
    out
}

fn direct_sums(cfg: &SuiteConfig) -> Vec<PropertyReport> {
    let start = std::time::Instant::now();
    let mut dims = PropertyReport::new(SUITE, "direct-sum-whittaker-dim");
    let mut anns = PropertyReport::new(SUITE, "direct-sum-annihilator");
    for psi in cfg.psis.iter().filter(|p| !p.is_zero()) {
        for k in 1..=cfg.direct_sum_bound {
            let xis = distinct_xis(cfg, k);
            let family = Arc::new(
                ModuleFamily::direct_sum(xis.iter().map(|xi| (psi.clone(), xi.clone())).collect()).expect("nonzero functional"),
            );
            let level = 3;
            let dim = whittaker_vectors(&family, psi, level).expect("nonzero functional").dim();
            dims.check(dim == k, || dim_cx(&family, psi, level, k.to_string(), dim));

            let sum = (0..k).fold(ModuleElement::zero(&family), |acc, c| &acc + &ModuleElement::generator(&family, c).expect("component"));
            let expected = xis.iter().fold(CentralPolynomial::one(), |acc, xi| acc.mul(&CentralPolynomial::linear(xi)));
            let got = annihilator_in_z(&sum).expect("nonzero");
            anns.check(got == expected, || {
                Counterexample::new(
                    "annihilator",
                    &[("family", family_to_json(&family).to_string()), ("element", sum.to_string())],
                    &expected,
                    &got,
                )
            });
        }
    }
    let elapsed = start.elapsed();
    dims.elapsed = elapsed / 2;
    anns.elapsed = elapsed / 2;
    vec![dims, anns]
}

fn root_pool() -> Vec<Rational> {
    vec![int(-1), int(0), int(1), int(2), frac(1, 2), frac(-3, 2)]
}

/// A random monic polynomial of degree at most 5 with roots from a fixed
/// pool, returned with its root multiplicities.
fn random_factored(rng: &mut Sampler) -> (CentralPolynomial, Vec<u32>) {
    let pool = root_pool();
    let mut mult = vec![0u32; pool.len()];
    for _ in 0..rng.below(6) {
        mult[rng.below(pool.len())] += 1;
    }
    let factors: Vec<(Rational, u32)> = pool.iter().cloned().zip(mult.iter().copied()).filter(|(_, a)| *a > 0).collect();
    (CentralPolynomial::from_factors(&factors), mult)
}

fn hom_formula(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "hom-dimension");
    let mut rng = Sampler::new(cfg.seed, "hom-dimension");
    for _ in 0..cfg.cases {
        let (p, mp) = random_factored(&mut rng);
        let (q, mq) = random_factored(&mut rng);
        let expected: u32 = mp.iter().zip(&mq).map(|(a, b)| (*a).min(*b)).sum();
        let h = hom_space(&p, &q).expect("monic inputs");
        let divides = h.gcd.divides(&p) && h.gcd.divides(&q) && h.gcd.is_monic();
        report.check(divides && h.dimension == expected as usize, || {
            Counterexample::new("hom-dim", &[("p", p.to_string()), ("q", q.to_string())], expected, h.dimension)
        });
    }
    report
}

fn surjectivity(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "surjectivity");
    let mut rng = Sampler::new(cfg.seed, "surjectivity");
    for _ in 0..cfg.cases {
        let (r, mr) = random_factored(&mut rng);
        let (q, mq) = random_factored(&mut rng);
        let expected = mr.iter().zip(&mq).all(|(a, b)| *a == 0 || *b == 0);
        let got = is_surjective_hom(&r, &q).expect("monic q");
        report.check(got == expected, || {
            Counterexample::new("surjective", &[("r", r.to_string()), ("q", q.to_string())], expected, got)
        });
    }
    report
}

fn decomposition_lengths(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "central-decomposition");
    let mut rng = Sampler::new(cfg.seed, "central-decomposition");
    for _ in 0..cfg.cases {
        let (p, mult) = random_factored(&mut rng);
        let factors: Vec<(Rational, u32)> =
            root_pool().into_iter().zip(mult).filter(|(_, a)| *a > 0).collect();
        if factors.is_empty() {
            continue;
        }
        let d = central_decomposition(&factors).expect("distinct roots");
        let degree = p.degree().unwrap_or(0);
        let diagonal = (0..factors.len()).all(|i| {
            (0..factors.len()).all(|j| d.hom_dimension(i, j) == if i == j { factors[i].1 as usize } else { 0 })
        });
        report.check(d.total_length() as usize == degree && d.polynomial() == p && diagonal, || {
            let text: Vec<String> = factors.iter().map(|(xi, a)| format!("{xi}:{a}")).collect();
            Counterexample::new("decompose", &[("factors", text.join(","))], format!("total length {degree}"), d.total_length())
        });
    }
    report
}

fn extraction(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "extract-wxi");
    let mut rng = Sampler::new(cfg.seed, "extract-wxi");
    for _ in 0..cfg.cases * 5 {
        let xi = rng.pick(&cfg.xis).clone();
        let family = Arc::new(ModuleFamily::universal(xi.clone()));
        let v = rng.module_element(&family, 5, 4);
        let got = extract_wxi(&v).expect("nonzero input");
        let (gamma, j) = extract_wxi_choice(&v).expect("nonzero input");
        let top = BasisIndex::new(Partition::empty(), j + gamma.len() as u32, 0);
        let ok = !got.is_zero() && got.terms().keys().all(|k| k.lambda.is_empty()) && !got.coefficient(&top).is_zero();
        report.check(ok, || {
            Counterexample::new(
                "extract-wxi",
                &[("xi", xi.to_string()), ("element", v.to_string())],
                format!("nonzero, in W_xi, with w[{}] present", top.j),
                &got,
            )
        });
    }
    report
}

fn singular_vector(cfg: &SuiteConfig) -> PropertyReport {
    let mut report = PropertyReport::new(SUITE, "lowest-weight-singular-vector");
    for xi in &cfg.xis {
        let family = Arc::new(ModuleFamily::verma(xi.clone(), int(0)));
        let v = act(&UeaElement::d(-1), &ModuleElement::generator(&family, 0).expect("generator"));
        for k in 1..=2 {
            let got = act(&UeaElement::d(k), &v);
            report.check(got.is_zero(), || {
                Counterexample::new(
                    "act",
                    &[
                        ("family", family_to_json(&family).to_string()),
                        ("expr", format!("d({k})")),
                        ("element", v.to_string()),
                        ("bracket", "virasoro".to_string()),
                    ],
                    "0",
                    &got,
                )
            });
        }
    }
    report
}
