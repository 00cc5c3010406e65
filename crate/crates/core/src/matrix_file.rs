//! Plain-text matrix files.
//!
//! ```text
//! 4
//! 1 4 4 1
//! 3 2 2 3
//! 2 3 3 2
//! 4 1 1 4
//! ```
//!
//! The first line is the order `n`, followed by exactly `n` lines of `n`
//! whitespace-separated integers in `1..=n`. Trailing blank lines are
//! ignored. A φ vector file is a single line of `n` integers.

use std::fmt::Write as _;

use thiserror::Error;

use crate::table::{Permutation, SquareTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected the matrix order on the first line")]
    MissingOrder { line: usize },
    #[error("line {line}, column {column}: `{token}` is not a valid integer")]
    BadToken {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: {value} is outside 1..={n}")]
    OutOfRange {
        line: usize,
        column: usize,
        value: usize,
        n: usize,
    },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last row")]
    Trailing { line: usize },
    #[error("order must be positive")]
    ZeroOrder,
    #[error("vector has a repeated value {value}")]
    NotPermutation { value: usize },
}

/// `(1-based column, token)` for every whitespace-separated token.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let after = &rest[start..];
        let len = after.find(char::is_whitespace).unwrap_or(after.len());
        let column = line[..offset + start].chars().count() + 1;
        let tok = &after[..len];
        offset += start + len;
        rest = &after[len..];
        Some((column, tok))
    })
}

fn parse_entry(line: usize, column: usize, tok: &str, n: usize) -> Result<usize, ParseError> {
    let value: usize = tok.parse().map_err(|_| ParseError::BadToken {
        line,
        column,
        token: tok.to_string(),
    })?;
    if value == 0 || value > n {
        return Err(ParseError::OutOfRange {
            line,
            column,
            value,
            n,
        });
    }
    Ok(value)
}

pub fn parse_matrix(text: &str) -> Result<SquareTable, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (first_no, first) = lines.next().ok_or(ParseError::MissingOrder { line: 1 })?;
    let mut head = tokens(first);
    let (column, tok) = head
        .next()
        .ok_or(ParseError::MissingOrder { line: first_no })?;
    let n: usize = tok.parse().map_err(|_| ParseError::BadToken {
        line: first_no,
        column,
        token: tok.to_string(),
    })?;
    if n == 0 {
        return Err(ParseError::ZeroOrder);
    }
    if let Some((column, tok)) = head.next() {
        return Err(ParseError::BadToken {
            line: first_no,
            column,
            token: tok.to_string(),
        });
    }

    let mut rows = Vec::with_capacity(n);
    for (line_no, line) in lines {
        let toks: Vec<_> = tokens(line).collect();
        if rows.len() == n {
            if toks.is_empty() {
                continue;
            }
            return Err(ParseError::Trailing { line: line_no });
        }
        if toks.len() != n {
            return Err(ParseError::RowLength {
                line: line_no,
                expected: n,
                found: toks.len(),
            });
        }
        let row = toks
            .into_iter()
            .map(|(column, tok)| parse_entry(line_no, column, tok, n))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    Ok(SquareTable::from_rows(&rows).expect("shape and range checked while parsing"))
}

/// Parses a single line of `n` integers forming a permutation of `1..=n`.
pub fn parse_vector(text: &str) -> Result<Permutation, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (idx, line) = lines.next().ok_or(ParseError::RowCount {
        expected: 1,
        found: 0,
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::Trailing { line: extra + 1 });
    }
    let toks: Vec<_> = tokens(line).collect();
    let n = toks.len();
    let image = toks
        .into_iter()
        .map(|(column, tok)| parse_entry(idx + 1, column, tok, n))
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::new(image).map_err(|e| match e {
        crate::error::MalformedTable::NotBijective { value } => {
            ParseError::NotPermutation { value }
        }
        _ => ParseError::ZeroOrder,
    })
}

/// Serializes in the exact file format: order line, then single-space rows.
pub fn write_matrix(rows: &[Vec<usize>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", rows.len());
    for row in rows {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn write_vector(p: &Permutation) -> String {
    let line: Vec<String> = p.image().iter().map(usize::to_string).collect();
    format!("{}\n", line.join(" "))
}
