use thiserror::Error;

/// Errors raised by the polynomial, root, classification and CLI layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    Division,
    #[error("operation undefined for the zero polynomial")]
    ZeroPoly,
    #[error("interval endpoints do not bracket a sign change")]
    NotIsolating,
    #[error("no multiplier (1+x)^N with N <= {0} matches the positive root count")]
    CapExhausted(u32),
    #[error("degree {degree} exceeds the supported maximum {max}")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("{0} is reducible over Q")]
    NotIrreducible(String),
    #[error("{0} has no positive real root")]
    NoPositiveRoot(String),
    #[error("root index {index} out of range: {count} positive root(s)")]
    RootIndex { index: usize, count: usize },
    #[error("elements live over different algebraic numbers")]
    MixedField,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("isomorphism test requires both monoids to be atomic")]
    RequiresAtomic,
    #[error("atom set is not determined within the search caps")]
    RequiresAtoms,
    #[error("antimatter monoid: no element has a factorization")]
    NoFactorizations,
    #[error("empty input")]
    EmptyInput,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("inconsistent verdict: {0}")]
    InconsistentVerdict(String),
    #[error("certificate failed to replay: {0}")]
    Replay(String),
}

pub type Result<T> = std::result::Result<T, Error>;
