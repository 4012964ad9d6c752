//! Small worked examples across the library, each checked exactly.

use std::sync::Arc;

use virasoro::algebra::rational::{frac, int};
use virasoro::text::{parse_element, parse_expression};
use virasoro::whittaker::{
    annihilator_in_z, central_decomposition, decompose_alpha, derived_functionals, extract_wxi, hom_space,
    in_line_ipsi, is_surjective_hom, structure_predicates, whittaker_vectors,
};
use virasoro::{
    act, bracket, enumerate_basis, multiply, partition_diff, psi_decompose, universal_map, weight, CentralPolynomial,
    Matrix, ModuleElement, ModuleFamily, NPlusFunctional, NPlusModule, Partition, Rational, UeaElement,
    WhittakerFunctional,
};

fn expr(text: &str) -> UeaElement {
    parse_expression(text).unwrap().evaluate()
}

fn element(family: &Arc<ModuleFamily>, text: &str) -> ModuleElement {
    parse_element(text, family).unwrap()
}

fn psi(a: Rational, b: Rational) -> WhittakerFunctional {
    WhittakerFunctional::new(a, b)
}

fn alpha(a: Rational, b: Rational) -> NPlusFunctional {
    NPlusFunctional::from_values([(1, a), (2, b)])
}

/// Flag-form `n = 2` module with functional `ψ` and superdiagonal `α`.
fn v2(xi: Rational, psi: &WhittakerFunctional, alpha: (Rational, Rational)) -> Arc<ModuleFamily> {
    let mut d1 = Matrix::scalar(2, &psi.psi1);
    let mut d2 = Matrix::scalar(2, &psi.psi2);
    d1[(0, 1)] = alpha.0;
    d2[(0, 1)] = alpha.1;
    Arc::new(ModuleFamily::induced(NPlusModule::new_valid(xi, d1, d2).unwrap()).unwrap())
}

fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn brackets() {
    assert_eq!(bracket(2, -2), expr("4*d(0) + 1/2*z"));
    assert_eq!(bracket(1, -1), expr("2*d(0)"));
    assert!(bracket(5, 5).is_zero());
    assert_eq!(bracket(1, -3), expr("4*d(-2)"));
    let (d2, dm2) = (UeaElement::d(2), UeaElement::d(-2));
    assert_eq!(multiply(&d2, &dm2) - multiply(&dm2, &d2), expr("4*d(0) + 1/2*z"));
    assert_eq!(multiply(&UeaElement::d(1), &UeaElement::d(-1)).to_string(), "d(-1)*d(1) + 2*d(0)");
    assert_eq!(expr("d(1)*d(-3)").to_string(), "d(-3)*d(1) + 4*d(-2)");
}

#[test]
fn weights() {
    let m = expr("d(-3)*d(0)*d(2)*z");
    let (mono, _) = m.terms().iter().next().unwrap();
    assert_eq!(weight(mono), -1);
    let balanced = expr("d(2)*d(-1)*d(-1)");
    assert_eq!(balanced.homogeneous_weight(), Some(0));
    assert_eq!(UeaElement::one().homogeneous_weight(), Some(0));
}

#[test]
fn partition_removal() {
    assert_eq!(partition_diff(&partition(&[1, 2, 2, 5]), &partition(&[2, 5])), Some(partition(&[1, 2])));
    assert_eq!(partition_diff(&partition(&[1, 2]), &Partition::empty()), Some(partition(&[1, 2])));
    assert_eq!(partition_diff(&partition(&[1, 2]), &partition(&[3])), None);
}

#[test]
fn actions_on_each_family() {
    let xi = frac(7, 2);
    let m = Arc::new(ModuleFamily::universal(xi.clone()));
    assert_eq!(act(&UeaElement::d(2), &element(&m, "d[-2]w[0]")), element(&m, "4*w[1] + 7/4*w[0]"));

    let p = psi(int(3), frac(-1, 2));
    let l = Arc::new(ModuleFamily::whittaker(p.clone(), xi.clone()).unwrap());
    let w = element(&l, "w");
    assert_eq!(act(&UeaElement::d(1), &w), w.scale(&int(3)));
    assert_eq!(act(&UeaElement::z(), &w), w.scale(&xi));

    let vn = v2(int(1), &psi(int(1), int(1)), (int(1), int(0)));
    let v = element(&vn, "v[2]");
    assert_eq!(act(&UeaElement::d(1), &v), element(&vn, "v[2] + v[1]"));
}

#[test]
fn basis_enumeration() {
    let m = ModuleFamily::universal(int(0));
    let listed: Vec<String> = enumerate_basis(&m, 2).iter().map(ToString::to_string).collect();
    assert_eq!(listed.len(), 7);
    let vn = v2(int(0), &psi(int(1), int(1)), (int(1), int(0)));
    assert_eq!(enumerate_basis(&vn, 2).len(), 14);
    assert_eq!(enumerate_basis(&vn, 0).len(), 2);
}

#[test]
fn universal_map_examples() {
    let p = psi(int(1), int(1));
    let vn = v2(int(0), &p, (int(2), int(4)));
    let l = Arc::new(ModuleFamily::whittaker(p, int(0)).unwrap());
    let w = element(&l, "w");
    let images = [w.clone(), w.scale(&int(5))];
    assert_eq!(universal_map(&element(&vn, "v[2]"), &images).unwrap(), w.scale(&int(5)));
    let x = element(&vn, "d[-3]d[0]^2 ⊗ v[1]");
    assert_eq!(universal_map(&x, &images).unwrap(), act(&expr("d(-3)*d(0)^2"), &w));
}

#[test]
fn whittaker_dimensions() {
    let p = psi(int(1), int(1));
    let l = Arc::new(ModuleFamily::whittaker(p.clone(), int(0)).unwrap());
    let basis = whittaker_vectors(&l, &p, 5).unwrap();
    assert_eq!(basis.vectors, vec![element(&l, "w")]);

    let vn = v2(int(0), &p, (int(1), int(0)));
    assert_eq!(whittaker_vectors(&vn, &p, 4).unwrap().vectors, vec![element(&vn, "v[1]")]);

    // α = 2·iψ: the second vector is v_2 − 2·d_0 v_1
    let vn = v2(int(0), &p, (int(2), int(4)));
    let basis = whittaker_vectors(&vn, &p, 3).unwrap();
    assert_eq!(basis.dim(), 2);
    let second = element(&vn, "v[2] - 2*d[0] ⊗ v[1]");
    for k in 1..=4 {
        assert_eq!(act(&UeaElement::d(k), &second), second.scale(&p.value(k)));
    }
}

#[test]
fn second_vector_when_psi2_vanishes() {
    let p = psi(int(1), int(0));
    let a = alpha(frac(1, 2), int(3));
    let (c0, c1) = decompose_alpha(&a, &p).unwrap();
    let d = derived_functionals(&p);
    assert_eq!(d.tilde_psi.scale(&c0).add(&d.i_psi.scale(&c1)), a);

    let vn = v2(int(1), &p, (frac(1, 2), int(3)));
    let basis = whittaker_vectors(&vn, &p, 3).unwrap();
    assert_eq!(basis.dim(), 2);
    let expected = &(&element(&vn, "v[2]") - &element(&vn, "d[0]^2 ⊗ v[1] - d[-1] ⊗ v[1]").scale(&c0))
        - &element(&vn, "d[0] ⊗ v[1]").scale(&c1);
    assert_eq!(basis.vectors[1], expected);
}

#[test]
fn functionals() {
    let d = derived_functionals(&psi(int(1), int(0)));
    assert_eq!(d.tilde_psi, alpha(int(1), int(-3)));
    let p = psi(int(1), int(1));
    assert!(in_line_ipsi(&alpha(int(2), int(4)), &p));
    assert!(!in_line_ipsi(&alpha(int(1), int(0)), &p));
    assert!(in_line_ipsi(&alpha(int(0), int(0)), &p));
}

#[test]
fn hom_examples() {
    let lin = |r: i64| CentralPolynomial::linear(&int(r));
    let p = lin(1).pow(2);
    let q = lin(1).mul(&lin(2));
    let h = hom_space(&p, &q).unwrap();
    assert_eq!((h.gcd.clone(), h.dimension, h.multiplier.clone()), (lin(1), 1, lin(2)));
    assert_eq!(hom_space(&q, &q).unwrap().dimension, 2);
    assert_eq!(hom_space(&lin(3), &q).unwrap().dimension, 0);
    assert!(!is_surjective_hom(&lin(2), &q).unwrap());
    assert!(is_surjective_hom(&CentralPolynomial::one(), &q).unwrap());
    assert!(is_surjective_hom(&lin(3), &p).unwrap());
}

#[test]
fn decompositions() {
    let d = central_decomposition(&[(int(1), 2), (int(2), 1)]).unwrap();
    assert_eq!((d.lengths(), d.total_length()), (vec![2, 1], 3));
    assert_eq!(central_decomposition(&[(int(4), 1)]).unwrap().lengths(), vec![1]);
    let d = central_decomposition(&[(int(0), 3), (int(1), 1), (int(2), 2)]).unwrap();
    assert_eq!((d.lengths(), d.total_length()), (vec![3, 1, 2], 6));
}

#[test]
fn annihilators() {
    let p = psi(int(1), int(1));
    let sum = Arc::new(ModuleFamily::direct_sum(vec![(p.clone(), int(1)), (p.clone(), int(2))]).unwrap());
    let lin = |r: i64| CentralPolynomial::linear(&int(r));
    assert_eq!(annihilator_in_z(&element(&sum, "w[1] + w[2]")).unwrap(), lin(1).mul(&lin(2)));
    assert_eq!(annihilator_in_z(&element(&sum, "d[-1]w[2]")).unwrap(), lin(2));
    let same = Arc::new(ModuleFamily::direct_sum(vec![(p.clone(), int(5)), (p, int(5))]).unwrap());
    assert_eq!(annihilator_in_z(&element(&same, "w[1] + w[2]")).unwrap(), lin(5));
}

#[test]
fn extraction_examples() {
    let xi = frac(7, 2);
    let m = Arc::new(ModuleFamily::universal(xi));
    assert_eq!(extract_wxi(&element(&m, "w[3]")).unwrap(), element(&m, "w[3]"));
    assert_eq!(extract_wxi(&element(&m, "d[-1]w[0]")).unwrap(), element(&m, "2*w[1]"));
    assert_eq!(extract_wxi(&element(&m, "d[-2]w[0] + w[5]")).unwrap(), element(&m, "4*w[1] + 7/4*w[0]"));
}

#[test]
fn block_decompositions() {
    let mut d1 = Matrix::scalar(3, &int(1));
    let mut d2 = Matrix::zeros(3);
    d1[(2, 2)] = int(0);
    d2[(2, 2)] = int(1);
    d1[(0, 1)] = int(1);
    let blocks = psi_decompose(&NPlusModule::new(int(0), d1, d2).unwrap()).unwrap();
    let shape: Vec<(WhittakerFunctional, usize)> = blocks.iter().map(|b| (b.functional.clone(), b.dim())).collect();
    assert_eq!(shape, vec![(psi(int(0), int(1)), 1), (psi(int(1), int(0)), 2)]);
}

#[test]
fn structure_examples() {
    let p = psi(int(1), int(1));
    let module = |a: (Rational, Rational)| match &*v2(int(0), &p, a) {
        ModuleFamily::Induced(n) => n.clone(),
        _ => unreachable!(),
    };
    let r = structure_predicates(&module((int(1), int(0))), 5).unwrap();
    assert!(r.dim_wh == 1 && r.is_uniserial_predicted);

    let q = psi(int(1), int(0));
    let mut d1 = Matrix::scalar(2, &int(1));
    d1[(0, 1)] = int(2);
    let n = NPlusModule::new_valid(int(0), d1, Matrix::zeros(2)).unwrap();
    let r = structure_predicates(&n, 5).unwrap();
    assert!(r.dim_wh == 2 && !r.is_uniserial_predicted && r.is_completely_reducible_predicted);
    assert_eq!(n.psi(), q);

    // n = 3 with α(1,2) on the line and α(2,3) off it
    let mut d1 = Matrix::scalar(3, &int(1));
    let mut d2 = Matrix::scalar(3, &int(1));
    d1[(0, 1)] = int(1);
    d2[(0, 1)] = int(2);
    d1[(1, 2)] = int(1);
    let n3 = NPlusModule::new_valid(int(0), d1, d2).unwrap();
    let r = structure_predicates(&n3, 6).unwrap();
    assert_eq!(r.w_count, 1);
    assert!(r.dim_wh <= 2 && r.bound_ok);
}

#[test]
fn d0_power_examples() {
    let p = psi(int(2), frac(5, 3));
    let l = Arc::new(ModuleFamily::whittaker(p.clone(), int(0)).unwrap());
    let w = element(&l, "w");
    assert!(act(&expr("d(3)*d(0)^0 - d(0)^0*d(3)"), &w).is_zero());
    assert_eq!(act(&expr("d(2)*d(0) - d(0)*d(2)"), &w), w.scale(&(int(2) * &p.psi2)));
}
