use thiserror::Error;

use crate::algebra::PolyError;
use crate::modules::ModuleError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhittakerError {
    #[error("the Whittaker functional must be nonzero for this family")]
    ZeroFunctional,
    #[error("d{generator} - psi{generator} leaves the F <= {level} subspace at {index}")]
    LevelNotPreserved { generator: i64, level: u32, index: String },
    #[error("polynomial must be monic and nonzero: {0}")]
    NotMonic(String),
    #[error("central character {0} is repeated")]
    RepeatedXi(String),
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("at least one factor is required")]
    NoFactors,
    #[error("the element must be nonzero")]
    ZeroElement,
    #[error("expected an element of {expected}")]
    WrongFamily { expected: &'static str },
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
