use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum WeylError {
    /// Unsupported or malformed group configuration.
    #[error("configuration error: {0}")]
    Config(String),
    /// Input outside an operation's domain (bad letter, non-root, non-representative, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An enumeration cap would be exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    /// A computation contradicted a theorem the code relies on. Reportable bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, WeylError>;
