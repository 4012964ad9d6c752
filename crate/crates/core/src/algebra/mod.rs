//! The enveloping algebra `U(Vir)`: exact scalars, partitions, PBW
//! monomials, the normal-ordering engine, and polynomials in `z`.

mod element;
mod monomial;
mod partition;
mod poly;
pub mod rational;
pub(crate) mod rewrite;

pub use element::{bracket, multiply, normal_order, normal_order_with, UeaElement};
pub(crate) use element::write_linear_combination;
pub use monomial::{weight, Generator, PbwMonomial};
pub use partition::{partition_diff, Partition};
pub use poly::{poly_gcd, CentralPolynomial, PolyError};
pub use rational::Rational;
pub use rewrite::{StructureConstants, Virasoro};
