use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("element labels must be non-empty")]
    EmptyLabel,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("knowledge mapping has no entry for `{0}`")]
    MissingMapping(String),
    #[error("operands belong to different universes")]
    UniverseMismatch,
    #[error("malformed decider: {0}")]
    MalformedDecider(String),
    #[error("universe of size {size} exceeds the enumeration cap of {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("space is not partial monotone: S(A, X) = 1 but S(A, Y) = 0 for A = {a}, X = {x}, Y = {y}")]
    NotPartialMonotone { a: String, x: String, y: String },
    #[error("space is reducible; trivial elements: {}", .0.join(", "))]
    Reducible(Vec<String>),
    #[error("every element is trivial; the reduced universe would be empty")]
    AllTrivial,
    #[error("mass assigned to the empty set")]
    MassOnEmptySet,
    #[error("non-positive mass {value} on {set}")]
    NonPositiveMass { set: String, value: String },
    #[error("total mass {0} is not 1")]
    MassSumNotOne(String),
    #[error("duplicate focal set {0}")]
    DuplicateFocalSet(String),
    #[error("set function is defined on {got} of {expected} subsets")]
    IncompleteSetFunction { expected: usize, got: usize },
    #[error("set function assigns two values to {0}")]
    DuplicateSetFunctionEntry(String),
    #[error("rational arithmetic overflow")]
    Overflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational `{0}` (expected \"a/b\" with integer a and positive integer b)")]
    ParseRational(String),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
