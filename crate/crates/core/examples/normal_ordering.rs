//! Normal ordering in `U(Vir)`: brackets, products and parsed expressions.
//!
//! Run with `cargo run --example normal_ordering`.

use virasoro::text::parse_expression;
use virasoro::{bracket, multiply, normal_order, Generator, UeaElement};

fn main() {
    for (k, j) in [(2, -2), (1, -1), (3, -3), (1, -3)] {
        println!("[d({k}), d({j})] = {}", bracket(k, j));
    }

    let word = [Generator::D(3), Generator::D(-1), Generator::Z, Generator::D(-2)];
    println!("d(3) d(-1) z d(-2) = {}", normal_order(&word));

    let u = multiply(&UeaElement::d(2), &UeaElement::d(-2));
    println!("d(2)*d(-2) = {u}");

    for text in ["(d(1) + d(-1))^2", "d(2)*d(1)*d(-3) - 1/2*z^2", "(d(1)*d(-1) - d(-1)*d(1))*d(0)"] {
        let e = parse_expression(text).expect("valid expression");
        println!("{text}  ->  {}", e.evaluate());
    }

    match parse_expression("d(1,2)") {
        Ok(_) => unreachable!(),
        Err(e) => println!("d(1,2): {e}"),
    }
}
