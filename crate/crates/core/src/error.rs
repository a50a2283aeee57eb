use thiserror::Error;

/// Failure modes of the library. Every variant carries enough context to
/// name the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Pauli string {input:?}: {reason}")]
    ParsePauli { input: String, reason: String },

    #[error("the perp set of the zero vector is the whole point set, not a hyperplane")]
    PerpOfIdentity,

    #[error("point set is not a geometric hyperplane of W(5,2)")]
    NotAHyperplane,

    #[error("the sum of a hyperplane with itself is undefined")]
    EqualHyperplanes,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a symplectic basis: {0}")]
    InvalidBasis(String),

    #[error("not a doily: {0}")]
    InvalidDoily(String),

    #[error("not a context line: {0}")]
    InvalidContextLine(String),

    #[error("not a pentagram: {0}")]
    InvalidPentagram(String),

    #[error("line is not one of the pentagram's lines")]
    LineNotInPentagram,

    #[error("not a mixed Veldkamp line: {0}")]
    MalformedVeldkampLine(String),

    #[error("inconsistent double six: {0}")]
    InconsistentDoubleSix(String),

    #[error("apex {0} is not one of the twenty double-six points")]
    ApexOutsideDoubleSix(String),

    #[error("weight lies off the root hyperplane (coordinate sum {0})")]
    OffHyperplaneWeight(i64),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid trivector label {0:?}")]
    InvalidLabel(String),

    #[error("not a Clifford frame: {0}")]
    InvalidFrame(String),

    #[error("unknown context {0:?}")]
    UnknownContext(String),

    /// A structural fact that is expected to hold by construction but is
    /// checked at runtime.
    #[error("structural invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
