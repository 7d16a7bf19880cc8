use thiserror::Error;

use crate::algebra::AxiomReport;

/// Errors surfaced by the fallible operations of this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand dimensions do not fit the operation.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A matrix required to be invertible has determinant zero.
    #[error("matrix is singular")]
    Singular,

    /// A rational literal did not parse as `p` or `p/q` with positive `q`.
    #[error("malformed rational `{0}`")]
    BadRational(String),

    /// No catalog entry under this name.
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    /// A construction was rejected because its input fails the axioms it
    /// presupposes; the report lists the offending basis tuples.
    #[error("{context}: input fails required axioms ({n} violation(s))", n = report.violations().len())]
    AxiomsFailed {
        context: &'static str,
        report: AxiomReport,
    },

    /// Two representations do not live over the same (structurally equal) algebra.
    #[error("representations live over different algebras")]
    AlgebraMismatch,

    /// The supplied map fails the intertwining equations it was required to satisfy.
    #[error("psi does not intertwine the given representations ({n} defect(s))", n = report.violations().len())]
    NotAnIntertwiner { report: AxiomReport },
}
