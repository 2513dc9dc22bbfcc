use thiserror::Error;

/// Every failure surfaced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("unsupported field GF({p}^{m})")]
    UnsupportedField { p: u64, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("value {value} is not an element of a field with {q} elements")]
    InvalidElement { value: u64, q: u32 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operation undefined on the zero code")]
    ZeroCode,
    #[error("enumeration of {required} messages exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("algebra does not contain the all-one vector")]
    NotUnital,
    #[error("subspace is not closed under componentwise products")]
    NotAnAlgebra,
    #[error("code does not have full support")]
    NotFullSupport,
    #[error("evaluation points are not pairwise distinct")]
    RepeatedEvaluationPoint,
    #[error("multiplier vector has a zero entry")]
    NonInvertibleMultiplier,
    #[error("length {n} exceeds q + 1 = {}", *q as u64 + 1)]
    LengthExceedsQPlus1 { n: usize, q: u32 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("solution space of dimension {dim} exceeds the ambiguity budget {limit}")]
    AmbiguousSolutionSpace { dim: usize, limit: usize },
    #[error("hypotheses unmet: {0}")]
    HypothesesUnmet(String),
    #[error("recovery failed: {0}")]
    RecoveryFailed(String),
    #[error("column pattern violation: {0}")]
    PatternViolation(String),
    #[error("extension produced a duplicate evaluation point")]
    DuplicateEvaluationPoint,
    #[error("not a PMDS pair: {0}")]
    NotPmds(String),
    #[error("internal theorem violation (implementation bug): {0}")]
    InternalTheoremViolation(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
