use crate::subset::SubsetWord;

/// Crate-wide error type. Everything reachable from file or CLI input maps
/// to one of these; contract violations between in-process callers panic
/// instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("universe size {0} out of range (expected 1..=64)")]
    UniverseOutOfRange(u32),

    #[error("element {element} out of range for universe [{universe}]")]
    ElementOutOfRange { element: u32, universe: u32 },

    #[error("weight {weight} out of range for universe [{universe}]")]
    WeightOutOfRange { weight: u32, universe: u32 },

    #[error("word {word} has weight {got}, expected {expected}")]
    WeightMismatch {
        word: SubsetWord,
        got: u32,
        expected: u32,
    },

    #[error("minimum distance {0} invalid: must be an even integer >= 2")]
    InvalidDistance(u32),

    #[error("duplicate set {0}")]
    DuplicateWord(SubsetWord),

    #[error("universe mismatch: {0} vs {1}")]
    UniverseMismatch(u32, u32),

    #[error("words {a} and {b} are at Hamming distance {got}, below the required {required}")]
    DistanceViolation {
        a: SubsetWord,
        b: SubsetWord,
        got: u32,
        required: u32,
    },

    #[error("pivot {pivot} out of range for universe [{universe}]")]
    PivotOutOfRange { pivot: u32, universe: u32 },

    #[error("cannot split a code of weight {weight} in universe [{universe}]: both sides must be nonempty levels")]
    DegenerateSplitWeight { weight: u32, universe: u32 },

    #[error("code has declared minimum distance {0}, but the construction requires at least 4")]
    DistanceBelowFour(u32),

    #[error("code has weight {got}, but the construction requires weight {expected}")]
    CodeWeightMismatch { got: u32, expected: u32 },

    #[error("split side violates subset-freeness: {down} is a subset of {up}")]
    SplitSubsetViolation { down: SubsetWord, up: SubsetWord },

    #[error("poset spec has {0} elements; at most {1} supported")]
    PosetTooLarge(usize, usize),

    #[error("poset spec relation ({0},{1}) is out of range or reflexive")]
    BadRelation(usize, usize),

    #[error("poset spec relations contain a cycle")]
    CyclicPoset,

    #[error("embedding search exceeded the configured limit of {0} steps")]
    SearchLimitExceeded(u64),

    #[error("instance too large for the exact solver: {vertices} candidate words (limit {limit})")]
    InstanceTooLarge { vertices: usize, limit: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
