//! Whittaker vectors of induced modules `V_N` for `n = 2`, in the generic
//! case, on the line `C*i_psi`, and with `psi_2 = 0`.
//!
//! Run with `cargo run --example whittaker_vectors`.

use std::sync::Arc;

use virasoro::algebra::rational::{frac, int};
use virasoro::whittaker::{decompose_alpha, in_line_ipsi, level_sweep, whittaker_vectors};
use virasoro::{Matrix, ModuleFamily, NPlusModule, Rational, WhittakerFunctional};

fn flag(psi: &WhittakerFunctional, a1: Rational, a2: Rational) -> NPlusModule {
    let mut d1 = Matrix::scalar(2, &psi.psi1);
    let mut d2 = Matrix::scalar(2, &psi.psi2);
    d1[(0, 1)] = a1;
    d2[(0, 1)] = a2;
    NPlusModule::new_valid(int(1), d1, d2).expect("every n = 2 flag is valid")
}

fn report(label: &str, psi: &WhittakerFunctional, n: NPlusModule) {
    let alpha = n.alpha(1, 2);
    let family = Arc::new(ModuleFamily::induced(n).expect("valid"));
    let basis = whittaker_vectors(&family, psi, 5).expect("nonzero functional");
    println!("{label}: psi = {psi}, alpha = {alpha}, on the line: {}", in_line_ipsi(&alpha, psi));
    println!("  dim Wh = {}", basis.dim());
    for v in &basis.vectors {
        println!("  {v}");
    }
    let sweep: Vec<String> = level_sweep(&family, psi, 5).expect("nonzero").iter().map(|(l, d)| format!("{l}:{d}")).collect();
    println!("  by level {}", sweep.join(" "));
}

fn main() {
    let psi = WhittakerFunctional::new(int(1), int(1));
    report("generic", &psi, flag(&psi, int(1), int(0)));
    report("on the line", &psi, flag(&psi, int(2), int(4)));

    let psi = WhittakerFunctional::new(int(2), int(0));
    let n = flag(&psi, frac(1, 2), int(3));
    let (c0, c1) = decompose_alpha(&n.alpha(1, 2), &psi).expect("psi_2 = 0");
    println!("alpha = {c0}*tilde_psi + {c1}*i_psi");
    report("psi_2 = 0", &psi, n);
}
