//! Error type shared by all algebra operations.

use thiserror::Error;

/// Axis of a multiplication table, used in Latin-square diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableAxis {
    Row,
    Column,
}

impl std::fmt::Display for TableAxis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TableAxis::Row => write!(f, "row"),
            TableAxis::Column => write!(f, "column"),
        }
    }
}

/// Everything that can go wrong when building or combining algebraic values.
///
/// Validation errors carry the first witness found in scan order so that
/// callers can report concrete counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("at least one element is required")]
    EmptyDomain,

    #[error("label {label:?} appears more than once")]
    DuplicateLabel { label: String },

    #[error("entry at ({row}, {col}) is {value}, outside 0..{size}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("operations are defined over different point sets")]
    PointSetMismatch,

    #[error("index {index} is out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("slice at t={t} is not a bijection")]
    NotInvertible { t: usize },

    #[error("images are not a bijection")]
    NotBijective,

    #[error("search space for n={n} exceeds the supported bound n<={max}")]
    SearchSpaceTooLarge { n: usize, max: usize },

    #[error("requested size {requested} exceeds the guard of {guard}")]
    OrderGuardExceeded { requested: u128, guard: u64 },

    #[error("closure exceeded the guard of {guard} elements")]
    ClosureGuardExceeded { guard: u64 },

    #[error("not a Latin square: value {value} repeats in {axis} {index}")]
    NotLatinSquare {
        axis: TableAxis,
        index: usize,
        value: usize,
    },

    #[error("no two-sided identity element")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },

    #[error("not associative: witness ({a} \u{b7} {b}) \u{b7} {c} != {a} \u{b7} ({b} \u{b7} {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("set is not closed under composition: witness pair ({left}, {right})")]
    NotClosed { left: usize, right: usize },
}
