//! Finite-dimensional `n+`-modules: derived actions, validity, block
//! decomposition and the JSON record format.
//!
//! Run with `cargo run --example nplus_modules`.

use virasoro::algebra::rational::int;
use virasoro::text::{nplus_from_json, nplus_to_json};
use virasoro::{derive_positive_actions, psi_decompose, Matrix, NPlusModule};

fn shift_with(n: usize, diagonal: i64, superdiagonal: &[i64]) -> Matrix {
    let mut m = Matrix::scalar(n, &int(diagonal));
    for (k, a) in superdiagonal.iter().enumerate() {
        m[(k, k + 1)] = int(*a);
    }
    m
}

fn main() {
    let d1 = shift_with(3, 1, &[1, 0]);
    let d2 = shift_with(3, 1, &[2, 1]);
    println!("D3 =\n{}", derive_positive_actions(&d1, &d2)[0]);
    let n = NPlusModule::new(int(0), d1, d2).expect("square");
    println!("{}", n.validate());

    let bad = NPlusModule::new(int(0), shift_with(4, 1, &[1, 1, 1]), shift_with(4, 1, &[1, 0, 1])).expect("square");
    println!("{}", bad.validate());

    // Two blocks, (1,1) and (2,0), made non-triangular by a change of basis.
    let mut d1 = Matrix::zeros(3);
    let mut d2 = Matrix::zeros(3);
    d1[(0, 0)] = int(1);
    d1[(1, 1)] = int(1);
    d1[(0, 1)] = int(1);
    d1[(2, 2)] = int(2);
    d2[(0, 0)] = int(1);
    d2[(1, 1)] = int(1);
    let mut p = Matrix::identity(3);
    p[(2, 0)] = int(1);
    p[(1, 2)] = int(-1);
    let mut p_inv = Matrix::identity(3);
    p_inv[(2, 0)] = int(-1);
    p_inv[(1, 2)] = int(1);
    p_inv[(1, 0)] = int(-1);
    assert_eq!(&p * &p_inv, Matrix::identity(3));
    let mixed = NPlusModule::new(int(0), &(&p * &d1) * &p_inv, &(&p * &d2) * &p_inv).expect("square");
    for block in psi_decompose(&mixed).expect("rational spectrum") {
        println!("block psi = {}, dim {}, basis {:?}", block.functional, block.dim(), block.basis.iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>());
    }

    let record = nplus_to_json(&n);
    println!("{record}");
    assert_eq!(nplus_from_json(&record).expect("round trip").d2(), n.d2());
}
