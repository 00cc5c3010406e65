use std::fmt;

use thiserror::Error;

use crate::error::{Line, MalformedTable};
use crate::group::{validate_abelian_group, CayleyMatrix};
use crate::table::SquareTable;

/// A cell position `(row, column)`, 1-based.
pub type Cell = (usize, usize);

/// Which deduction produced (or refuted) a cell value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `a▷b + b▷a = a + b`
    PairSum,
    /// `a▷b + b▷c = a▷c + b`
    TripleSum,
    /// `a▷b + φ(b) = φ(a) + b`
    Reconstruction,
    /// `φ(x + y) = φ(x) + φ(y)`
    Automorphism,
    Commutativity,
    Associativity,
    LatinSquare,
    /// a value chosen while branching
    Branch,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::PairSum => "a▷b + b▷a = a + b",
            Rule::TripleSum => "a▷b + b▷c = a▷c + b",
            Rule::Reconstruction => "a▷b + φ(b) = φ(a) + b",
            Rule::Automorphism => "φ(x + y) = φ(x) + φ(y)",
            Rule::Commutativity => "commutativity",
            Rule::Associativity => "associativity",
            Rule::LatinSquare => "latin square",
            Rule::Branch => "branch",
        })
    }
}

/// Why a partial table cannot be completed to a group table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Contradiction {
    #[error("{rule}: cell {:?} must equal cell {:?}, but they hold {} and {}", cells[0], cells[1], values[0], values[1])]
    Clash {
        rule: Rule,
        cells: [Cell; 2],
        values: [usize; 2],
    },
    #[error("{line} {index} would contain {value} twice, at {:?} and {:?}", cells[0], cells[1])]
    Duplicate {
        line: Line,
        index: usize,
        value: usize,
        cells: [Cell; 2],
    },
    #[error("{line} {index} has no cell left for {value}")]
    NoPlace {
        line: Line,
        index: usize,
        value: usize,
    },
}

impl Contradiction {
    /// The cells involved, for reports.
    pub fn cells(&self) -> Vec<Cell> {
        match self {
            Self::Clash { cells, .. } | Self::Duplicate { cells, .. } => cells.to_vec(),
            Self::NoPlace { line, index, .. } => match line {
                Line::Row => vec![(*index, 1)],
                Line::Column => vec![(1, *index)],
            },
        }
    }
}

/// Cayley table under construction; 0 marks an unknown entry.
///
/// Row and column 1 always hold the identity pattern, and no row or column
/// ever holds the same nonzero value twice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialCayley {
    n: usize,
    cells: Vec<usize>,
}

impl PartialCayley {
    /// Border filled with `1..=n`, everything else unknown.
    pub fn seed(n: usize) -> Self {
        assert!(n > 0);
        let mut cells = vec![0; n * n];
        for i in 1..=n {
            cells[i - 1] = i;
            cells[(i - 1) * n] = i;
        }
        Self { n, cells }
    }

    /// Parses rows over `0..=n`. The border must already be in standard form
    /// and no row or column may repeat a nonzero value.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, PartialError> {
        let n = rows.len();
        if n == 0 {
            return Err(MalformedTable::Empty.into());
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(MalformedTable::NotSquare {
                    row: r + 1,
                    len: row.len(),
                    expected: n,
                }
                .into());
            }
            for (c, &value) in row.iter().enumerate() {
                if value > n {
                    return Err(MalformedTable::OutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value,
                        n,
                    }
                    .into());
                }
                cells.push(value);
            }
        }
        let mut out = Self::seed(n);
        for i in 1..=n {
            if cells[i - 1] != i || cells[(i - 1) * n] != i {
                return Err(PartialError::Border { i });
            }
        }
        for i in 2..=n {
            for j in 2..=n {
                let v = cells[(i - 1) * n + (j - 1)];
                if v != 0 {
                    out.set(i, j, v, Rule::Branch, (i, j))?;
                }
            }
        }
        Ok(out)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn unknown_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v == 0).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&v| v != 0)
    }

    /// Whether every nonzero entry of `other` appears unchanged in `self`.
    pub fn extends(&self, other: &PartialCayley) -> bool {
        self.n == other.n
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(&mine, &theirs)| theirs == 0 || mine == theirs)
    }

    /// The completed table as a validated abelian group, if it is one.
    pub fn to_cayley(&self) -> Option<CayleyMatrix> {
        if !self.is_complete() {
            return None;
        }
        let table = SquareTable::from_rows(&self.to_rows()).ok()?;
        validate_abelian_group(table).ok()
    }

    fn find_in_row(&self, i: usize, value: usize) -> Option<usize> {
        (1..=self.n).find(|&x| self.get(i, x) == value)
    }

    fn find_in_column(&self, j: usize, value: usize) -> Option<usize> {
        (1..=self.n).find(|&y| self.get(y, j) == value)
    }

    /// Writes `value` into `(i, j)`. Returns whether the cell changed.
    pub(crate) fn set(
        &mut self,
        i: usize,
        j: usize,
        value: usize,
        rule: Rule,
        source: Cell,
    ) -> Result<bool, Contradiction> {
        let current = self.get(i, j);
        if current == value {
            return Ok(false);
        }
        if current != 0 {
            return Err(Contradiction::Clash {
                rule,
                cells: [source, (i, j)],
                values: [value, current],
            });
        }
        if let Some(x) = self.find_in_row(i, value) {
            return Err(Contradiction::Duplicate {
                line: Line::Row,
                index: i,
                value,
                cells: [(i, x), (i, j)],
            });
        }
        if let Some(y) = self.find_in_column(j, value) {
            return Err(Contradiction::Duplicate {
                line: Line::Column,
                index: j,
                value,
                cells: [(y, j), (i, j)],
            });
        }
        self.cells[(i - 1) * self.n + (j - 1)] = value;
        Ok(true)
    }

    /// Forces two cells to hold the same value.
    pub(crate) fn unify(&mut self, a: Cell, b: Cell, rule: Rule) -> Result<bool, Contradiction> {
        let va = self.get(a.0, a.1);
        let vb = self.get(b.0, b.1);
        match (va, vb) {
            (0, 0) => Ok(false),
            (0, v) => self.set(a.0, a.1, v, rule, b),
            (v, 0) => self.set(b.0, b.1, v, rule, a),
            (x, y) if x == y => Ok(false),
            (x, y) => Err(Contradiction::Clash {
                rule,
                cells: [a, b],
                values: [x, y],
            }),
        }
    }

    /// One sweep of commutativity, associativity and Latin-square
    /// deductions. Returns whether anything was filled in.
    pub(crate) fn group_pass(&mut self) -> Result<bool, Contradiction> {
        let n = self.n;
        let mut changed = false;
        for i in 2..=n {
            for j in i + 1..=n {
                changed |= self.unify((i, j), (j, i), Rule::Commutativity)?;
            }
        }
        // (i·j)·k = i·(j·k); row and column 1 make the identity cases trivial.
        for i in 2..=n {
            for j in 2..=n {
                for k in 2..=n {
                    let ij = self.get(i, j);
                    let jk = self.get(j, k);
                    changed |= match (ij, jk) {
                        (0, 0) => false,
                        (ij, 0) => match self.get(ij, k) {
                            0 => false,
                            v => match self.find_in_row(i, v) {
                                Some(x) => self.set(j, k, x, Rule::Associativity, (ij, k))?,
                                None => false,
                            },
                        },
                        (0, jk) => match self.get(i, jk) {
                            0 => false,
                            v => match self.find_in_column(k, v) {
                                Some(y) => self.set(i, j, y, Rule::Associativity, (i, jk))?,
                                None => false,
                            },
                        },
                        (ij, jk) => self.unify((ij, k), (i, jk), Rule::Associativity)?,
                    };
                }
            }
        }
        changed |= self.latin_pass()?;
        Ok(changed)
    }

    /// Places every value that has exactly one possible cell left in some
    /// row or column; fails when a value has none. For the value 1 this is
    /// the requirement that every row and column can still contain the
    /// identity.
    fn latin_pass(&mut self) -> Result<bool, Contradiction> {
        let n = self.n;
        let mut changed = false;
        for line in [Line::Row, Line::Column] {
            for index in 2..=n {
                let at = |k: usize| match line {
                    Line::Row => (index, k),
                    Line::Column => (k, index),
                };
                for value in 1..=n {
                    let mut present = false;
                    let mut candidates = Vec::new();
                    for k in 2..=n {
                        let (i, j) = at(k);
                        match self.get(i, j) {
                            v if v == value => {
                                present = true;
                                break;
                            }
                            0 => {
                                let crossing = match line {
                                    Line::Row => self.find_in_column(j, value),
                                    Line::Column => self.find_in_row(i, value),
                                };
                                if crossing.is_none() {
                                    candidates.push((i, j));
                                }
                            }
                            _ => {}
                        }
                    }
                    if present || self.get(at(1).0, at(1).1) == value {
                        continue;
                    }
                    match candidates.as_slice() {
                        [] => return Err(Contradiction::NoPlace { line, index, value }),
                        [(i, j)] => {
                            changed |= self.set(*i, *j, value, Rule::LatinSquare, (*i, *j))?
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(changed)
    }

    /// Checks that no row or column repeats a nonzero value and that every
    /// missing value still has a cell.
    pub(crate) fn check_consistent(&self) -> Result<(), Contradiction> {
        let mut copy = self.clone();
        copy.latin_pass().map(|_| ())?;
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                let v = self.get(i, j);
                if v == 0 {
                    continue;
                }
                if let Some(x) = (j + 1..=n).find(|&x| self.get(i, x) == v) {
                    return Err(Contradiction::Duplicate {
                        line: Line::Row,
                        index: i,
                        value: v,
                        cells: [(i, j), (i, x)],
                    });
                }
                if let Some(y) = (i + 1..=n).find(|&y| self.get(y, j) == v) {
                    return Err(Contradiction::Duplicate {
                        line: Line::Column,
                        index: j,
                        value: v,
                        cells: [(i, j), (y, j)],
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PartialCayley {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cells.chunks(self.n)).finish()
    }
}

impl fmt::Display for PartialCayley {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.n.to_string().len();
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row
                .iter()
                .map(|&v| match v {
                    0 => format!("{:>width$}", "."),
                    v => format!("{v:>width$}"),
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartialError {
    #[error(transparent)]
    Malformed(#[from] MalformedTable),
    #[error("row/column 1 is not the identity pattern at {i}")]
    Border { i: usize },
    #[error(transparent)]
    Inconsistent(#[from] Contradiction),
}
