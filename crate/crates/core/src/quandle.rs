//! Finite quandles given by their matrices.
//!
//! Row `i`, column `j` of a quandle matrix holds `k` when `x_i ▷ x_j = x_k`.
//! Quandles satisfying `(a▷b)▷(c▷d) = (a▷c)▷(b▷d)` are called abelian here;
//! the same condition is often called *medial*.

use crate::error::{Error, QuandleViolation, Result};
use crate::group::CayleyMatrix;
use crate::table::{Permutation, SquareTable};

/// A validated quandle matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuandleMatrix {
    table: SquareTable,
}

impl QuandleMatrix {
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        validate_quandle(SquareTable::from_rows(rows)?)
    }

    pub(crate) fn new_unchecked(table: SquareTable) -> Self {
        debug_assert_eq!(first_violation(&table), None);
        Self { table }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// `a ▷ b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn table(&self) -> &SquareTable {
        &self.table
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.table.to_rows()
    }

    /// The right translation `x ↦ x ▷ b` as a permutation (column `b`).
    pub fn right_translation(&self, b: usize) -> Permutation {
        Permutation::new(self.table.column(b)).expect("columns of a quandle are bijective")
    }

    /// The isomorphic quandle obtained by renaming every label `i` to `sigma(i)`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        Self::new_unchecked(self.table.relabel(sigma))
    }

    /// `(a,b,c,d)` with `(a▷b)▷(c▷d) ≠ (a▷c)▷(b▷d)`, if any.
    pub fn abelian_witness(&self) -> Option<[usize; 4]> {
        let n = self.order();
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    for d in 1..=n {
                        let lhs = self.op(self.op(a, b), self.op(c, d));
                        let rhs = self.op(self.op(a, c), self.op(b, d));
                        if lhs != rhs {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian_witness().is_none()
    }

    /// `(a,b,c)` with `a▷(b▷c) ≠ (a▷b)▷(a▷c)`, if any.
    pub fn left_distributive_witness(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    if self.op(a, self.op(b, c)) != self.op(self.op(a, b), self.op(a, c)) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_left_distributive(&self) -> bool {
        self.left_distributive_witness().is_none()
    }

    /// The dual quandle: `a ◁ b` is the unique `c` with `c ▷ b = a`.
    pub fn dual(&self) -> Self {
        let n = self.order();
        let mut rows = vec![vec![0; n]; n];
        for b in 1..=n {
            for c in 1..=n {
                rows[self.op(c, b) - 1][b - 1] = c;
            }
        }
        let table = SquareTable::from_rows(&rows).expect("column inverse stays in range");
        Self::new_unchecked(table)
    }
}

fn first_violation(t: &SquareTable) -> Option<QuandleViolation> {
    let n = t.order();
    for i in 1..=n {
        let value = t.get(i, i);
        if value != i {
            return Some(QuandleViolation::Idempotency { i, value });
        }
    }
    for column in 1..=n {
        let mut first_row = vec![0usize; n + 1];
        for row in 1..=n {
            let value = t.get(row, column);
            if first_row[value] != 0 {
                return Some(QuandleViolation::ColumnNotBijective {
                    column,
                    first: first_row[value],
                    second: row,
                    value,
                });
            }
            first_row[value] = row;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let ij = t.get(i, j);
            for k in 1..=n {
                if t.get(ij, k) != t.get(t.get(i, k), t.get(j, k)) {
                    return Some(QuandleViolation::RightDistributivity { i, j, k });
                }
            }
        }
    }
    None
}

/// Checks the quandle axioms in the order idempotency, right-invertibility,
/// right self-distributivity, reporting the first failure in row-major order.
pub fn validate_quandle(table: SquareTable) -> Result<QuandleMatrix> {
    match first_violation(&table) {
        Some(v) => Err(v.into()),
        None => Ok(QuandleMatrix { table }),
    }
}

/// `i ▷ j = i`.
pub fn trivial_quandle(n: usize) -> QuandleMatrix {
    QuandleMatrix::new_unchecked(SquareTable::from_fn(n, |i, _| i))
}

/// `i ▷ j = 2j − i (mod n)`, written on labels `1..=n`.
pub fn dihedral_quandle(n: usize) -> QuandleMatrix {
    QuandleMatrix::new_unchecked(SquareTable::from_fn(n, |i, j| {
        let n = n as i64;
        ((2 * j as i64 - i as i64 - 1).rem_euclid(n) + 1) as usize
    }))
}

/// Conjugation quandle `a ▷ b = b⁻¹ a b` of any group (commutative or not).
pub fn conj_quandle(g: &CayleyMatrix) -> QuandleMatrix {
    let n = g.order();
    let inverses: Vec<usize> = (1..=n).map(|b| g.inverse(b)).collect();
    QuandleMatrix::new_unchecked(SquareTable::from_fn(n, |a, b| {
        g.mul(g.mul(inverses[b - 1], a), b)
    }))
}

/// Whether `f` (given as its image vector on `1..=src.order()`) preserves `▷`.
pub fn is_quandle_hom(f: &[usize], src: &QuandleMatrix, dst: &QuandleMatrix) -> bool {
    let m = src.order();
    if f.len() != m || f.iter().any(|&v| v == 0 || v > dst.order()) {
        return false;
    }
    (1..=m).all(|i| (1..=m).all(|j| f[src.op(i, j) - 1] == dst.op(f[i - 1], f[j - 1])))
}

pub fn is_quandle_iso(f: &[usize], src: &QuandleMatrix, dst: &QuandleMatrix) -> bool {
    src.order() == dst.order()
        && Permutation::new(f.to_vec()).is_ok()
        && is_quandle_hom(f, src, dst)
}

/// Size limits for [`count_homs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomCap {
    pub max_src: usize,
    pub max_dst: usize,
}

impl Default for HomCap {
    fn default() -> Self {
        Self {
            max_src: 8,
            max_dst: 12,
        }
    }
}

/// Number of quandle homomorphisms `src → dst`.
///
/// Maps are built one element at a time; every homomorphism condition whose
/// three labels are already assigned is checked before extending, so the
/// count is exact while most of the `n^m` candidates are never visited.
pub fn count_homs(src: &QuandleMatrix, dst: &QuandleMatrix, cap: HomCap) -> Result<u64> {
    if src.order() > cap.max_src {
        return Err(Error::SizeCap {
            what: "source quandle",
            order: src.order(),
            cap: cap.max_src,
        });
    }
    if dst.order() > cap.max_dst {
        return Err(Error::SizeCap {
            what: "target quandle",
            order: dst.order(),
            cap: cap.max_dst,
        });
    }
    let mut f = vec![0usize; src.order() + 1];
    Ok(count_homs_from(1, &mut f, src, dst))
}

fn count_homs_from(
    pos: usize,
    f: &mut Vec<usize>,
    src: &QuandleMatrix,
    dst: &QuandleMatrix,
) -> u64 {
    let m = src.order();
    if pos > m {
        return 1;
    }
    let mut total = 0;
    'value: for v in 1..=dst.order() {
        f[pos] = v;
        // Conditions that became checkable now that `pos` is assigned.
        for i in 1..=pos {
            for j in 1..=pos {
                if i != pos && j != pos && src.op(i, j) != pos {
                    continue;
                }
                let k = src.op(i, j);
                if k <= pos && f[k] != dst.op(f[i], f[j]) {
                    continue 'value;
                }
            }
        }
        total += count_homs_from(pos + 1, f, src, dst);
    }
    f[pos] = 0;
    total
}

/// Every quandle matrix of order `n`, as labeled tables (no isomorphism
/// rejection), in lexicographic order of their columns.
pub fn enumerate_quandles(n: usize) -> Vec<QuandleMatrix> {
    assert!(n > 0);
    // Candidate columns: permutations p of 1..=n with p(j) = j.
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(n, &mut Vec::new(), &mut vec![false; n + 1], &mut perms);
    let candidates: Vec<Vec<&Vec<usize>>> = (1..=n)
        .map(|j| perms.iter().filter(|p| p[j - 1] == j).collect())
        .collect();

    let mut cols: Vec<&Vec<usize>> = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend_columns(n, &candidates, &mut cols, &mut out);
    out
}

fn permutations(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            cur.push(v);
            permutations(n, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
}

fn extend_columns<'a>(
    n: usize,
    candidates: &[Vec<&'a Vec<usize>>],
    cols: &mut Vec<&'a Vec<usize>>,
    out: &mut Vec<QuandleMatrix>,
) {
    let m = cols.len();
    if m == n {
        let table = SquareTable::from_fn(n, |i, j| cols[j - 1][i - 1]);
        out.push(QuandleMatrix::new_unchecked(table));
        return;
    }
    for &col in &candidates[m] {
        cols.push(col);
        if distributive_so_far(cols) {
            extend_columns(n, candidates, cols, out);
        }
        cols.pop();
    }
}

/// Checks `(i▷j)▷k = (i▷k)▷(j▷k)` for every triple whose referenced columns
/// (`j`, `k` and `j▷k`) are among the first `cols.len()` columns.
fn distributive_so_far(cols: &[&Vec<usize>]) -> bool {
    let m = cols.len();
    let n = cols[0].len();
    let op = |i: usize, j: usize| cols[j - 1][i - 1];
    for j in 1..=m {
        for k in 1..=m {
            let jk = op(j, k);
            if jk > m {
                continue;
            }
            // only triples touching the newest column are new
            if j != m && k != m && jk != m {
                continue;
            }
            for i in 1..=n {
                if op(op(i, j), k) != op(op(i, k), jk) {
                    return false;
                }
            }
        }
    }
    true
}
