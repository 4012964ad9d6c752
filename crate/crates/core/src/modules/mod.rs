//! Module families over `U(Vir)`: constructors, bases, actions, and the
//! finite-dimensional `n⁺`-modules that seed `V_N`.

mod element;
mod error;
mod family;
mod functional;
mod matrix;
mod nplus;

pub use element::{act, act_with, enumerate_basis, universal_map, BasisIndex, ModuleElement};
pub use error::ModuleError;
pub use family::ModuleFamily;
pub use functional::{NPlusFunctional, WhittakerFunctional};
pub use matrix::Matrix;
pub use nplus::{derive_positive_actions, psi_decompose, NPlusModule, PsiBlock, RelationViolation, ValidityReport};
