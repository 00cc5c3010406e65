//! Square operation tables over the labels `1..=n`.
//!
//! Every public accessor speaks 1-based labels, matching the matrix notation
//! used for quandles and Cayley tables. Storage is a flat row-major vector.

use std::fmt;

use crate::error::MalformedTable;

/// An `n x n` table whose entries are labels in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareTable {
    n: usize,
    cells: Vec<usize>,
}

impl SquareTable {
    /// Builds a table from rows, checking shape and entry range.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, MalformedTable> {
        let n = rows.len();
        if n == 0 {
            return Err(MalformedTable::Empty);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(MalformedTable::NotSquare {
                    row: r + 1,
                    len: row.len(),
                    expected: n,
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value == 0 || value > n {
                    return Err(MalformedTable::OutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value,
                        n,
                    });
                }
                cells.push(value);
            }
        }
        Ok(Self { n, cells })
    }

    /// Builds a table by evaluating `f(i, j)` on every pair of labels.
    ///
    /// Panics if `f` returns a label outside `1..=n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(n > 0, "table order must be positive");
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let v = f(i, j);
                assert!((1..=n).contains(&v), "entry {v} out of range at ({i},{j})");
                cells.push(v);
            }
        }
        Self { n, cells }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j` (both 1-based).
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.cells[(i - 1) * self.n..i * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<usize> {
        (1..=self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// Table of the structure transported along the bijection `sigma`:
    /// the new table satisfies `new[sigma(i)][sigma(j)] = sigma(old[i][j])`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        assert_eq!(sigma.len(), self.n);
        let inv = sigma.inverse();
        Self::from_fn(self.n, |i, j| {
            sigma.apply(self.get(inv.apply(i), inv.apply(j)))
        })
    }
}

impl fmt::Debug for SquareTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.cells.chunks(self.n)).finish()
    }
}

impl fmt::Display for SquareTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.n.to_string().len();
        for row in self.cells.chunks(self.n) {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A bijection of `1..=n`, stored as its image vector `[p(1), ..., p(n)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self, MalformedTable> {
        let n = image.len();
        if n == 0 {
            return Err(MalformedTable::Empty);
        }
        let mut seen = vec![false; n + 1];
        for (i, &v) in image.iter().enumerate() {
            if v == 0 || v > n {
                return Err(MalformedTable::OutOfRange {
                    row: 1,
                    col: i + 1,
                    value: v,
                    n,
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(MalformedTable::NotBijective { value: v });
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Self { image }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self {
            image: other.image.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }
}

/// Calls `visit` with every permutation of `1..=n` that fixes 1, in
/// lexicographic order of the image vector.
pub fn for_each_permutation_fixing_one(n: usize, mut visit: impl FnMut(&Permutation)) {
    fn rec(
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&Permutation),
    ) {
        let n = used.len() - 1;
        if pos > n {
            visit(&Permutation {
                image: image.clone(),
            });
            return;
        }
        for v in 2..=n {
            if !used[v] {
                used[v] = true;
                image.push(v);
                rec(pos + 1, image, used, visit);
                image.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n + 1];
    used[1] = true;
    let mut image = vec![1];
    rec(2, &mut image, &mut used, &mut visit);
}
