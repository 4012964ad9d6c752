//! The case `psi = 0`: extracting vectors of `W_xi = C[d_0]w` from elements
//! of `M(0, xi)`, and the singular vector `d_{-1}v+` of `M(0, xi, 0)`.
//!
//! Run with `cargo run --example lowest_weight`.

use std::sync::Arc;

use virasoro::algebra::rational::{frac, int};
use virasoro::text::parse_element;
use virasoro::whittaker::{extract_wxi, extract_wxi_choice};
use virasoro::{act, ModuleFamily, UeaElement};

fn main() {
    let m = Arc::new(ModuleFamily::universal(frac(7, 2)));
    for text in ["d[-1]w[0]", "d[-2]w[0] + w[5]", "d[-3]d[-1]w[2] - 2*d[-2]d[-2]w[0]", "w[3]"] {
        let v = parse_element(text, &m).expect("valid");
        let (gamma, j) = extract_wxi_choice(&v).expect("nonzero");
        println!("{v}\n  acting with d_gamma, gamma = {gamma}, j = {j}: {}", extract_wxi(&v).expect("nonzero"));
    }

    for h in [int(0), frac(1, 2)] {
        let verma = Arc::new(ModuleFamily::verma(int(1), h.clone()));
        let v = parse_element("d[-1]v+", &verma).expect("valid");
        let images: Vec<String> = (1..=2).map(|k| act(&UeaElement::d(k), &v).to_string()).collect();
        println!("h = {h}: d(1), d(2) on {v}: {}", images.join(", "));
    }
}
