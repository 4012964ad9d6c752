//! Maps between cyclic Whittaker modules `L_p = M_psi / p(z) M_psi`, and the
//! decomposition of `L_p` by central character.
//!
//! Run with `cargo run --example hom_and_decomposition`.

use std::sync::Arc;

use virasoro::algebra::rational::int;
use virasoro::text::{parse_element, parse_polynomial};
use virasoro::whittaker::{annihilator_in_z, central_decomposition, hom_space, is_surjective_hom};
use virasoro::{ModuleFamily, WhittakerFunctional};

fn main() {
    let p = parse_polynomial("(z-1)^2").expect("valid");
    let q = parse_polynomial("(z-1)*(z-2)").expect("valid");
    let h = hom_space(&p, &q).expect("monic");
    println!("Hom(L_p, L_q) for p = {p}, q = {q}: dim {}, gcd {}, maps are w -> f(z)*({})*w", h.dimension, h.gcd, h.multiplier);

    for r in ["z - 2", "z + 3", "1"] {
        let r = parse_polynomial(r).expect("valid");
        println!("multiplication by {r} onto L_q: {}", is_surjective_hom(&r, &q).expect("monic"));
    }

    let d = central_decomposition(&[(int(0), 3), (int(1), 1), (int(2), 2)]).expect("distinct characters");
    println!("L_p with p = {}:", d.polynomial());
    for (i, (xi, a)) in d.factors.iter().enumerate() {
        println!("  summand xi = {xi}: length {a}, annihilator {}", d.summand_annihilator(i));
    }
    println!("  total length {}", d.total_length());

    let psi = WhittakerFunctional::new(int(1), int(1));
    let sum = Arc::new(ModuleFamily::direct_sum(vec![(psi.clone(), int(1)), (psi.clone(), int(2)), (psi, int(5))]).expect("valid"));
    for text in ["w[1] + w[2] + w[3]", "d[-1]w[2] - w[3]"] {
        let v = parse_element(text, &sum).expect("valid");
        println!("Ann_Z({v}) = {}", annihilator_in_z(&v).expect("nonzero"));
    }
}
