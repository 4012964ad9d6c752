//! The module families and how `U(Vir)` acts on them.
//!
//! Run with `cargo run --example module_actions`.

use std::sync::Arc;

use virasoro::algebra::rational::{frac, int};
use virasoro::text::{parse_element, parse_expression};
use virasoro::{act, enumerate_basis, universal_map, Matrix, ModuleFamily, NPlusModule, WhittakerFunctional};

fn main() {
    let psi = WhittakerFunctional::new(int(1), int(1));
    let mut d1 = Matrix::scalar(2, &int(1));
    let mut d2 = Matrix::scalar(2, &int(1));
    d1[(0, 1)] = int(1);
    d2[(0, 1)] = int(0);
    let n = NPlusModule::new_valid(int(0), d1, d2).expect("valid n = 2 module");

    let families = [
        ModuleFamily::universal(frac(7, 2)),
        ModuleFamily::verma(int(1), frac(1, 2)),
        ModuleFamily::whittaker(psi.clone(), int(0)).expect("nonzero functional"),
        ModuleFamily::induced(n).expect("valid"),
        ModuleFamily::direct_sum(vec![(psi.clone(), int(0)), (psi.clone(), int(2))]).expect("nonzero functional"),
    ];
    let u = parse_expression("d(2)*d(-1) + z").expect("valid").evaluate();
    for family in families.into_iter().map(Arc::new) {
        let basis = enumerate_basis(&family, 2);
        println!("{family}: {} basis vectors with F <= 2", basis.len());
        let generator = virasoro::ModuleElement::generator(&family, 0).expect("component 0");
        let m = act(&parse_expression("d(-1)*d(0)").expect("valid").evaluate(), &generator);
        println!("  m = {m}");
        println!("  (d(2)*d(-1) + z) m = {}", act(&u, &m));
    }

    // 1 ⊗ v_i ↦ w_i into L(ψ, 0)
    let mut d1 = Matrix::scalar(2, &int(1));
    let mut d2 = Matrix::scalar(2, &int(1));
    d1[(0, 1)] = int(2);
    d2[(0, 1)] = int(4);
    let vn = Arc::new(ModuleFamily::induced(NPlusModule::new_valid(int(0), d1, d2).expect("valid")).expect("valid"));
    let l = Arc::new(ModuleFamily::whittaker(psi, int(0)).expect("nonzero functional"));
    let w = parse_element("w", &l).expect("generator");
    let images = [w.clone(), w.scale(&int(3))];
    let x = parse_element("d[-2]d[0] ⊗ v[2] + v[1]", &vn).expect("valid element");
    println!("pi({x}) = {}", universal_map(&x, &images).expect("compatible images"));
}
