use thiserror::Error;

/// Errors raised by constructions whose preconditions are violated.
///
/// Failures of axioms (associativity, equivariance, naturality, ...) are not
/// errors: they are reported as [`Violation`](crate::Violation) lists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("incomplete table: {0}")]
    IncompleteTable(String),
    #[error("functors are not parallel")]
    NotParallel,
    #[error("frame mismatch: {0}")]
    FrameMismatch(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("path is not composable at position {0}")]
    NotComposable(usize),
    #[error("arity {arity} exceeds the bound {bound}")]
    ArityExceeded { arity: usize, bound: usize },
    #[error("enumeration aborted after {limit} candidate assignments")]
    EnumerationLimit { limit: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// One failed instance of an axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Name of the axiom or rule, e.g. `"associativity"`.
    pub rule: String,
    /// Human-readable description naming the offending instance.
    pub detail: String,
}

impl Violation {
    pub fn new(rule: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            rule: rule.into(),
            detail: detail.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}
