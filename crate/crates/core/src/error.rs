use thiserror::Error;

/// Errors raised while building or parsing a single permutation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("malformed cycle notation: {0}")]
    MalformedCycle(String),
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },
    #[error("image list is not a bijection")]
    NotBijective,
    #[error("degree must be positive")]
    ZeroDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),

    #[error("no generators given")]
    NoGenerators,
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{what} exceeds the cap of {cap} (reached {reached})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        reached: usize,
    },

    #[error("subgroups belong to different parent groups")]
    MixedParents,
    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,
    #[error("element set is not closed under multiplication")]
    NotClosed,

    #[error("generator index {index} is out of range (group has {count} generators)")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("generator {index} is given more than one image")]
    DuplicateImage { index: usize },
    #[error("generator {index} has no image")]
    MissingImage { index: usize },
    #[error("image of generator {index} is not an element of the group")]
    ImageNotInGroup { index: usize },
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("element map is not bijective")]
    NotBijective,
    #[error("action of order {action_order} is not coprime to |G| = {group_order} (gcd {gcd})")]
    NotCoprime {
        action_order: usize,
        group_order: usize,
        gcd: usize,
    },
    #[error("automorphisms act on different groups")]
    MixedTargets,
    #[error("subgroup is not invariant under the action")]
    NotInvariant,

    #[error("{prime} does not divide the group order {order}")]
    PrimeDoesNotDivide { prime: u64, order: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
