//! Error types shared across the kernel.

use thiserror::Error;

/// Errors raised by the core arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    /// Two operands live in algebras with different numbers of variable pairs.
    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation that needs at least one operand received none.
    #[error("empty input: cannot determine the ambient dimension")]
    EmptyInput,
}

/// Errors raised while evaluating or decoding membership certificates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("generator index {index} out of range (presentation has {count} generators)")]
    GeneratorIndex { index: usize, count: usize },

    /// An inverse-twist node is only sound when every twist component is nonzero.
    #[error("unsound alphainv node: some twist component is zero")]
    UnsoundAlphaInv,

    #[error("malformed certificate: {0}")]
    Malformed(String),

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error(transparent)]
    Weyl(#[from] WeylError),

    #[error("element payload: {0}")]
    Element(#[from] crate::parse::ParseError),
}

/// Errors raised by the ideal-transformation algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    /// A difference step hit a twist-fixed nonconstant coefficient, so the
    /// degree bookkeeping the construction relies on breaks down. Cannot
    /// happen for n = 1 with a nonzero twist.
    #[error("stalled: {0}")]
    Stalled(String),

    #[error("zero input element")]
    ZeroInput,

    #[error("all twist components are zero")]
    AllKZero,

    #[error("twist component {index} is zero, but every component must be nonzero")]
    KComponentZero { index: usize },

    #[error("generator {index} has a nonconstant coefficient")]
    NonConstantGenerator { index: usize },

    #[error("no generators given")]
    EmptyInput,

    /// A construction-time sanity check failed; indicates a kernel bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Weyl(#[from] WeylError),

    #[error(transparent)]
    Certificate(#[from] CertificateError),
}
