//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by group constructions, presentation machinery and the
/// induction pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed permutation: images {0:?} are not a bijection")]
    MalformedPermutation(Vec<usize>),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("{0} is not a subgroup of the ambient group")]
    NotASubgroup(String),

    #[error("{0} is not normal in the ambient group")]
    NotNormal(String),

    #[error("generator images do not extend to a homomorphism: {reason}")]
    NotAHomomorphism { reason: String },

    #[error("element budget exceeded: {what} needs more than {limit}")]
    BudgetExceeded { what: String, limit: usize },

    #[error("coset limit exceeded: enumeration needs more than {limit} cosets")]
    CosetLimitExceeded { limit: usize },

    #[error("generator index {index} out of range for {n_gens} generators")]
    GeneratorOutOfRange { index: usize, n_gens: usize },

    #[error("CM1 fails: mu(m^p) != p^-1 (mu m) p for m={m}, p={p}")]
    Cm1Violation { m: String, p: String },

    #[error("CM2 fails: n^(mu m) != m^-1 n m for m={m}, n={n}")]
    Cm2Violation { m: String, n: String },

    #[error("CAT1 fails: {reason}")]
    Cat1Violation { reason: String },

    #[error("CAT2 fails: [ker t, ker h] is nontrivial (contains {witness})")]
    Cat2Violation { witness: String },

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("morphism square does not commute at generator {0}")]
    SquareViolation(String),

    #[error("morphism is not equivariant at (m, p) = ({m}, {p})")]
    EquivarianceViolation { m: String, p: String },

    #[error("group is not abelian")]
    NotAbelian,

    #[error("homomorphism is not surjective")]
    NotSurjective,

    #[error("kernel is not contained in the centre")]
    KernelNotCentral,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
