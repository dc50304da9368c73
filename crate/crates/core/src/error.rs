use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unpinned action: {generator} does not preserve the simple base")]
    UnpinnedAction { generator: String },
    #[error("non-crystallographic data: {0}")]
    NonCrystallographic(String),
    #[error("echelonnage required: restricted system is not reduced at orbit {orbit}")]
    EchelonnageRequired { orbit: String },
    #[error("degenerate Levi lattice: coroot lattice of the Levi does not inject")]
    DegenerateLeviLattice,
    #[error("non-pinned frobenius: {0}")]
    NonPinnedFrobenius(String),
    #[error("bound required: {0}")]
    BoundRequired(String),
    #[error("elements belong to different groups")]
    MixedParents,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("equivariance violated: {0}")]
    EquivarianceViolated(String),
    #[error("twist check failed ({clause}): {detail}")]
    TwistCheckFailed { clause: String, detail: String },
    #[error("Levi {inner} is not contained in {outer}")]
    LeviNotContained { inner: String, outer: String },
}

pub type Result<T> = std::result::Result<T, Error>;
