//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by series arithmetic, the symmetric-group tables, the
/// Frobenius-algebra layer and the TQFT evaluators.
///
/// All recoverable failure modes are funneled through this enum so that
/// callers (in particular the CLI) can map them onto exit codes without
/// string matching. Internal consistency failures — e.g. a character table
/// that fails orthogonality — are bugs, not user errors, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two series of different truncation orders were combined.
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// Inversion (or a negative power) was requested for a series whose
    /// constant term is zero.
    #[error("series is not a unit: constant term is zero")]
    NotAUnit,

    /// The constant term has no square root in the rationals.
    #[error("no rational square root: {0}")]
    NoSquareRoot(String),

    /// Division by t^power hit a nonzero coefficient below t^power.
    #[error("not divisible by t^{power}: coefficient of t^{index} is nonzero")]
    NotDivisible { power: usize, index: usize },

    /// A partition constructor or parser saw an entry that is not a
    /// positive integer.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A precondition on arguments was violated (wrong degree, label not
    /// found, empty boundary, ...). The message spells out which one.
    #[error("{0}")]
    Domain(String),

    /// Idempotent lifting was given seeds that are not an idempotent basis
    /// modulo t.
    #[error("bad lifting seeds: {0}")]
    Seed(String),

    /// An eigenvalue computation hit a counit value that is not a unit, so
    /// the algebra is not semisimple over the series ring.
    #[error("not semisimple: {0}")]
    NotSemisimple(String),

    /// The change-of-basis matrix handed to `conjugate_basis` is singular.
    #[error("change-of-basis matrix is singular")]
    SingularChangeOfBasis,

    /// An algebra handed to a TQFT evaluator fails the Frobenius axioms.
    #[error("invalid Frobenius algebra: {0}")]
    InvalidAlgebra(String),

    /// A brute-force enumeration would exceed its element budget.
    #[error(
        "brute-force enumeration of {required} tuples exceeds the budget of {budget}; \
         raise GWTQFT_BUDGET or shrink (d, g, boundaries)"
    )]
    TooLarge { required: u128, budget: u64 },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
