use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// Reports carried by precondition failures are rendered to text so the
/// error type stays independent of the scalar field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An input failed an axiom an operation depends on.
    #[error("precondition failed: {context}: {detail}")]
    Precondition { context: String, detail: String },

    /// The differential squares to something nonzero, so the quotient
    /// defining cohomology does not exist.
    #[error("ill-defined complex: {0}")]
    IllDefinedComplex(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A 2-cochain pair failed to produce a valid extension.
    #[error("cocycle condition fails: {0}")]
    CocycleCondition(String),

    /// The supplied pair is not a coboundary witness for the given cochain.
    #[error("witness mismatch: {0}")]
    WitnessMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(what: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "{what}: expected {expected}, found {found}"
        )))
    }
}
