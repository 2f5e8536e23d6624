use alloc::vec::Vec;
use core::fmt;

use crate::extend::SscViolation;
use crate::orient::MinRuleError;

/// Errors raised by the library.
///
/// Negative answers (a profile that is not single-crossing, an unsatisfiable
/// constraint set) are ordinary return values and never show up here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must agree in size do not.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A matrix entry is not 0 or 1.
    NonBinaryEntry {
        row: usize,
        column: usize,
        value: u8,
    },
    /// A profile needs at least one candidate and one voter.
    EmptyProfile,
    IdOutOfRange {
        id: usize,
        bound: usize,
    },
    EmptySelection,
    /// A ranking or axis is not a permutation of `0..len`.
    NotAPermutation,
    /// A triple with repeated or out-of-range elements.
    InvalidTriple {
        triple: (usize, usize, usize),
        ground_size: usize,
    },
    /// An argument is below its minimum (e.g. a cycle profile needs `n >= 2`).
    TooSmall {
        value: usize,
        minimum: usize,
    },
    /// An exhaustive search was asked to go beyond its configured cap.
    CapExceeded {
        size: usize,
        cap: usize,
    },
    /// The weak-order profile is not seemingly single-crossing along the axis.
    NotSsc(SscViolation),
    /// A directed graph that had to be acyclic contains this cycle.
    Cyclic(Vec<usize>),
    /// The min-rule failed on a graph that passed the monochromatic-cycle
    /// check. Cannot happen for approval ballots.
    StructureViolation(MinRuleError),
    /// An internal guarantee was broken.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonBinaryEntry { row, column, value } => {
                write!(f, "entry ({row}, {column}) is {value}, expected 0 or 1")
            }
            Error::EmptyProfile => f.write_str("profile has no candidates or no voters"),
            Error::IdOutOfRange { id, bound } => write!(f, "id {id} out of range 0..{bound}"),
            Error::EmptySelection => f.write_str("empty selection"),
            Error::NotAPermutation => f.write_str("not a permutation"),
            Error::InvalidTriple {
                triple,
                ground_size,
            } => write!(
                f,
                "invalid triple ({}, {}, {}) over ground size {ground_size}",
                triple.0, triple.1, triple.2
            ),
            Error::TooSmall { value, minimum } => {
                write!(f, "value {value} is below the minimum {minimum}")
            }
            Error::CapExceeded { size, cap } => {
                write!(f, "size {size} exceeds the exhaustive-search cap {cap}")
            }
            Error::NotSsc(w) => write!(f, "profile is not seemingly single-crossing: {w}"),
            Error::Cyclic(cycle) => write!(f, "graph has a cycle through {cycle:?}"),
            Error::StructureViolation(e) => write!(f, "structure violation: {e}"),
            Error::Internal(msg) => write!(f, "internal invariant failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
