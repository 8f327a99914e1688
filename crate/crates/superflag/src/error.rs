use thiserror::Error;

/// Error type shared by all modules.
///
/// `Internal*` variants signal a broken invariant of this crate (a bug), never
/// a property of valid input; callers map them to a distinct exit status.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unrecognized type string {0:?}: expected factors like A2, B3, G2 joined by 'x'")]
    InvalidType(String),
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("weight has {got} coordinates, ambient system has rank {want}")]
    WeightLength { got: usize, want: usize },
    #[error("operands live in different root systems ({0} vs {1})")]
    SystemMismatch(String, String),
    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),
    #[error("simple-root index {0} is out of range (rank {1})")]
    SimpleIndexOutOfRange(usize, usize),
    #[error("factor index {0} is out of range ({1} factors)")]
    FactorIndexOutOfRange(usize, usize),
    #[error("weight {0:?} is not dominant {1}")]
    NotDominant(Vec<i64>, String),
    #[error("character is virtual where an actual character is required")]
    VirtualCharacter,
    #[error("character is not completely reducible over the chosen Levi subset")]
    NotCompletelyReducible,
    #[error("dimension exceeds the representable range")]
    DimensionOverflow,
    #[error("basis index {0} is out of range (dimension {1})")]
    BasisIndexOutOfRange(usize, usize),
    #[error("basis element {index}: parity does not match degree {degree} (mod 2)")]
    ParityDegreeMismatch { index: usize, degree: i64 },
    #[error("bracket [{i}, {j}] has a component at index {k}, outside degree/parity constraints")]
    BracketGrading { i: usize, j: usize, k: usize },
    #[error("bracket [{0}, {0}] of an even element must vanish")]
    EvenSelfBracket(usize),
    #[error("bracket table key ({i}, {j}) must satisfy i <= j")]
    BracketKeyOrder { i: usize, j: usize },
    #[error("bracket table key ({0}, {1}) appears more than once")]
    DuplicateBracket(usize, usize),
    #[error("negative part is zero: irreducibility is undefined")]
    EmptyNegativePart,
    #[error("degree {0} is out of range for this operation")]
    DegreeOutOfRange(i64),
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("cotangent pipeline requires a simple type, got {0} factors")]
    NotSimpleType(usize),
    #[error("superpoint dimension {0} is out of the supported range 1..=8")]
    SuperpointRange(usize),
    #[error("malformed model JSON: {0}")]
    ModelJson(String),
    #[error("internal: negative multiplicity in a computed character")]
    InternalNegativeMultiplicity,
    #[error("internal: structure constants underdetermined at root {0:?}")]
    InternalUnderdetermined(Vec<i64>),
    #[error("internal: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalNegativeMultiplicity
                | Error::InternalUnderdetermined(_)
                | Error::Internal(_)
        )
    }
}
