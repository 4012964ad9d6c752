//! Exact symbolic computation for the universal enveloping algebra of the
//! Virasoro algebra and for the Whittaker-category modules built on it.
//!
//! The crate is organised in layers:
//!
//! - [`algebra`]: rationals, partitions, PBW monomials, the normal-ordering
//!   rewrite engine, and polynomials in the central element `z`.
//! - [`modules`]: the module families `M(0,ξ)`, `M(0,ξ,h)`, `L(ψ,ξ)`, `V_N`
//!   and finite direct sums of `L(ψ,ξᵢ)`, with generator actions, basis
//!   enumeration, finite-dimensional `n⁺`-modules and the universal map.
//! - [`text`]: the expression, element and polynomial syntaxes and the JSON
//!   family records.
//! - [`linalg`]: exact sparse nullspace computation.
//! - [`whittaker`]: Whittaker-vector solver, Hom spaces, central
//!   decompositions, `W_ξ` extraction and structure predicates.
//! - [`verify`]: reproducible property campaigns over the above.
//! - [`cli`]: the command dispatcher behind the `virasoro` binary.
//!
//! All arithmetic is exact over ℚ; there is no floating point anywhere.

pub mod algebra;
pub mod cli;
pub mod linalg;
pub mod modules;
pub mod text;
pub mod verify;
pub mod whittaker;

pub use algebra::{
    bracket, multiply, normal_order, partition_diff, poly_gcd, weight, CentralPolynomial,
    Generator, Partition, PbwMonomial, Rational, UeaElement,
};
pub use modules::{
    act, derive_positive_actions, enumerate_basis, psi_decompose, universal_map, BasisIndex,
    Matrix, ModuleElement, ModuleError, ModuleFamily, NPlusFunctional, NPlusModule,
    WhittakerFunctional,
};
