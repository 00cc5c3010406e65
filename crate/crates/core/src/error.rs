use thiserror::Error;

/// Structural problems with a table before any axiom is checked.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedTable {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row},{col}) is outside 1..={n}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("value {value} occurs twice in a permutation vector")]
    NotBijective { value: usize },
    #[error("expected order {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
}

/// First quandle axiom that fails, with witness labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QuandleViolation {
    #[error("axiom (i) idempotency fails: {i} ▷ {i} = {value}")]
    Idempotency { i: usize, value: usize },
    #[error("axiom (ii) right-invertibility fails: column {column} maps rows {first} and {second} to {value}")]
    ColumnNotBijective {
        column: usize,
        first: usize,
        second: usize,
        value: usize,
    },
    #[error("axiom (iii) right self-distributivity fails at ({i},{j},{k})")]
    RightDistributivity { i: usize, j: usize, k: usize },
}

impl QuandleViolation {
    /// Witness labels in the order they appear in the message.
    pub fn witnesses(&self) -> Vec<usize> {
        match *self {
            Self::Idempotency { i, .. } => vec![i],
            Self::ColumnNotBijective {
                column,
                first,
                second,
                ..
            } => vec![column, first, second],
            Self::RightDistributivity { i, j, k } => vec![i, j, k],
        }
    }

    pub fn axiom(&self) -> &'static str {
        match self {
            Self::Idempotency { .. } => "idempotency",
            Self::ColumnNotBijective { .. } => "right-invertibility",
            Self::RightDistributivity { .. } => "right-distributivity",
        }
    }
}

/// First group axiom that fails for a standard-form Cayley table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GroupViolation {
    #[error("element 1 is not the identity: row/column 1 differs at {i}")]
    Identity { i: usize },
    #[error("no inverse: {line} {index} does not contain 1")]
    MissingInverse { line: Line, index: usize },
    #[error("not a Latin square: {line} {index} repeats {value}")]
    NotLatin {
        line: Line,
        index: usize,
        value: usize,
    },
    #[error("associativity fails at ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("commutativity fails at ({i},{j})")]
    NotCommutative { i: usize, j: usize },
}

impl GroupViolation {
    pub fn witnesses(&self) -> Vec<usize> {
        match *self {
            Self::Identity { i } => vec![i],
            Self::MissingInverse { index, .. } => vec![index],
            Self::NotLatin { index, value, .. } => vec![index, value],
            Self::NotAssociative { i, j, k } => vec![i, j, k],
            Self::NotCommutative { i, j } => vec![i, j],
        }
    }

    pub fn axiom(&self) -> &'static str {
        match self {
            Self::Identity { .. } => "identity",
            Self::MissingInverse { .. } => "inverses",
            Self::NotLatin { .. } => "latin-square",
            Self::NotAssociative { .. } => "associativity",
            Self::NotCommutative { .. } => "commutativity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Line::Row => "row",
            Line::Column => "column",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Malformed(#[from] MalformedTable),
    #[error("not a quandle: {0}")]
    NotQuandle(#[from] QuandleViolation),
    #[error("not a group: {0}")]
    NotGroup(#[from] GroupViolation),
    #[error("permutation {image:?} is not an automorphism of the group")]
    NotAutomorphism { image: Vec<usize> },
    #[error("{what} order {order} exceeds the cap of {cap}")]
    SizeCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
