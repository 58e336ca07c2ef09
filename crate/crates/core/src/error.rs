use thiserror::Error;

/// Errors raised while building groups or running the automorphism pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("group order {order} exceeds the cap of {cap}")]
    OrderCapExceeded { order: u128, cap: usize },

    #[error("invalid permutation: {0}")]
    BadPermutation(String),

    #[error("invalid word: {0}")]
    BadWord(String),

    #[error("action is not an automorphism of the base: {0}")]
    BadAction(String),

    #[error("unknown built-in group `{0}`")]
    UnknownBuiltin(String),

    #[error("element index {index} out of range for a group of order {order}")]
    InvalidIndex { index: usize, order: usize },

    #[error("group of order {order} is not a p-group")]
    NotPGroup { order: usize },

    #[error("{0} is not abelian")]
    NotAbelian(&'static str),

    #[error("the group is abelian; a non-abelian group is required")]
    AbelianGroup,

    #[error("invalid direct decomposition: {0}")]
    Decomposition(#[from] DecompositionError),

    #[error("invalid alpha data: {0}")]
    AlphaData(String),

    #[error("group of order {order} exceeds the enumeration cap of {cap}")]
    EnumerationCap { order: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Reasons a pair of subgroups fails to be an internal direct product `H x K`
/// with `H` abelian and non-trivial and `K` non-abelian.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("H is trivial")]
    TrivialH,
    #[error("H is not abelian")]
    NonAbelianH,
    #[error("K is abelian")]
    AbelianK,
    #[error("{0} is not normal")]
    NotNormal(&'static str),
    #[error("H and K intersect non-trivially")]
    NontrivialIntersection,
    #[error("HK is not the whole group (|H||K| = {product}, |G| = {order})")]
    ProductNotWhole { product: usize, order: usize },
    #[error("elements of H and K do not commute")]
    NotCommuting,
    #[error("at least two factors are required, got {0}")]
    TooFewFactors(usize),
    #[error("factor {index} violates its role: {reason}")]
    FactorRole { index: usize, reason: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
