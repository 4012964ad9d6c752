//! Whittaker vectors, Hom spaces between cyclic modules, central
//! decompositions, the `W_ξ` extraction procedure and structure predicates
//! for induced modules `V_N`.

mod error;
mod extract;
mod functionals;
mod hom;
pub(crate) mod solver;
mod structure;

pub use error::WhittakerError;
pub use extract::{annihilator_in_z, extract_wxi, extract_wxi_choice};
pub use functionals::{decompose_alpha, derived_functionals, in_line_ipsi, DerivedFunctionals};
pub use hom::{central_decomposition, hom_space, is_surjective_hom, CentralDecomposition, HomSpaceData};
pub use solver::{level_sweep, whittaker_vectors, WhittakerBasis};
pub use structure::{structure_predicates, StructureReport};
