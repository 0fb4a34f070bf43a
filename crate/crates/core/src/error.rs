use std::path::PathBuf;

use thiserror::Error;

use crate::group::ElementId;

/// Failures while reading or validating a multiplication table.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("malformed table at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("table has order 0")]
    Empty,
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity law fails: 0*{a} = {left}, {a}*0 = {right}")]
    IdentityLaw {
        a: ElementId,
        left: ElementId,
        right: ElementId,
    },
    #[error("row {0} is not a permutation")]
    RowNotPermutation(ElementId),
    #[error("column {0} is not a permutation")]
    ColumnNotPermutation(ElementId),
    #[error("associativity fails for ({a}, {b}, {c}): (ab)c = {left}, a(bc) = {right}")]
    NonAssociative {
        a: ElementId,
        b: ElementId,
        c: ElementId,
        left: ElementId,
        right: ElementId,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("failed to read or write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("element {id} out of range for a group of order {order}")]
    ElementOutOfRange { id: ElementId, order: usize },
    #[error("subset of width {found} does not belong to a group of order {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("odd-order elements do not form a subgroup")]
    OddElementsNotClosed,
    #[error("element {0} lies in the subgroup")]
    ElementInSubgroup(ElementId),
    #[error("invalid group spec: {0}")]
    Spec(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("invalid catalog config: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
