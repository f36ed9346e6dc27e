//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TropError {
    /// A lattice vector was zero where a nonzero vector is required.
    InvalidVector,
    /// The entries of a would-be Newton fan do not sum to zero.
    UnbalancedFan,
    /// A numeric argument is outside its domain (e.g. even input to `double_factorial`).
    InvalidArgument(String),
    /// The point configuration failed a genericity check; the caller should
    /// retry with a fresh seed.
    DegenerateConfiguration(String),
    /// A morphism violates a structural precondition (valence, balancing, ...).
    InvalidMorphism(String),
    /// Closed forms for relative invariants exist only for n <= 2.
    UnsupportedClosedForm(u32),
    /// An internal identity that must hold by construction failed.
    InternalInconsistency(String),
    /// Roof/plane data handed to `assemble` are incompatible.
    AssemblyMismatch(String),
    /// A vertex of an X-morphism matches none of the four local models.
    NotASolutionVertex(String),
    /// Premorphism conditions fail, so morphism-level checks are meaningless.
    InvalidPremorphism(String),
    /// Malformed input file or CLI argument.
    Usage(String),
}

impl fmt::Display for TropError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropError::InvalidVector => write!(f, "zero lattice vector is not allowed here"),
            TropError::UnbalancedFan => write!(f, "fan entries do not sum to zero"),
            TropError::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            TropError::DegenerateConfiguration(s) => {
                write!(f, "degenerate point configuration: {s}")
            }
            TropError::InvalidMorphism(s) => write!(f, "invalid morphism: {s}"),
            TropError::UnsupportedClosedForm(n) => {
                write!(f, "no closed form for n = {n} (only n <= 2)")
            }
            TropError::InternalInconsistency(s) => write!(f, "internal inconsistency: {s}"),
            TropError::AssemblyMismatch(s) => write!(f, "assembly mismatch: {s}"),
            TropError::NotASolutionVertex(s) => write!(f, "vertex matches no local model: {s}"),
            TropError::InvalidPremorphism(s) => write!(f, "premorphism checks fail: {s}"),
            TropError::Usage(s) => write!(f, "usage error: {s}"),
        }
    }
}

impl std::error::Error for TropError {}

pub type Result<T> = std::result::Result<T, TropError>;
