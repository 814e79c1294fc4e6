//! Error type shared by every module of the crate.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or querying the objects of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rank outside the admissible range of a family or type.
    #[error("invalid rank {rank} for {family}")]
    InvalidRank { family: String, rank: usize },
    /// A type or family name that could not be recognised.
    #[error("unknown type `{0}`")]
    UnknownType(String),
    /// A vector of norm zero was used where a real root was required.
    #[error("isotropic vector has no coroot")]
    IsotropicRoot,
    /// Two objects of different sizes were combined.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    /// An element is not a member of the group (or lattice) it is required to lie in.
    #[error("{element} is not in {group}")]
    NotInGroup { element: String, group: String },
    /// A 2x2 matrix whose determinant is not one.
    #[error("determinant of {0} is not 1")]
    DeterminantNotOne(String),
    /// A generator or map symbol that is not defined for the object at hand.
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    /// A braid letter used at a level where it has no meaning.
    #[error("level mismatch: {0}")]
    LevelMismatch(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// A quantity that is not defined for the given input (e.g. simply-laced data).
    #[error("undefined: {0}")]
    Undefined(String),
}
