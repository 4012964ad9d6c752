use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("an n+-module must have positive dimension")]
    EmptyModule,
    #[error("invalid n+-module: {0}")]
    InvalidNPlusModule(String),
    #[error("the Whittaker functional must be nonzero")]
    ZeroFunctional,
    #[error("a direct sum needs at least one summand")]
    EmptyDirectSum,
    #[error("the spectrum of D1 or D2 is not rational")]
    NonRationalSpectrum,
    #[error("the generalized eigenspaces do not decompose the module")]
    NotDecomposable,
    #[error("elements belong to different module families")]
    FamilyMismatch,
    #[error("expected {expected} images, found {found}")]
    ComponentCountMismatch { expected: usize, found: usize },
    #[error("central character mismatch: source {source_xi}, target {target_xi}")]
    CentralCharacterMismatch { source_xi: String, target_xi: String },
    #[error("basis index {0} is not valid for this family")]
    BadIndex(String),
}
