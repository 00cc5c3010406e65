//! Standard-form Cayley matrices: element 1 is always the identity.

use crate::error::{Error, GroupViolation, Line, Result};
use crate::table::{Permutation, SquareTable};

/// A validated standard-form group table. Commutativity is not implied;
/// see [`CayleyMatrix::is_commutative`] and [`validate_abelian_group`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyMatrix {
    table: SquareTable,
}

impl CayleyMatrix {
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        validate_group(SquareTable::from_rows(rows)?)
    }

    pub(crate) fn new_unchecked(table: SquareTable) -> Self {
        debug_assert_eq!(first_group_violation(&table), None);
        Self { table }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table.get(i, j)
    }

    pub fn table(&self) -> &SquareTable {
        &self.table
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.table.to_rows()
    }

    pub fn is_commutative(&self) -> bool {
        commutativity_witness(&self.table).is_none()
    }

    /// The unique `m` with `i · m = 1`.
    pub fn inverse(&self, i: usize) -> usize {
        self.table
            .row(i)
            .iter()
            .position(|&v| v == 1)
            .map(|p| p + 1)
            .expect("every row of a group table contains the identity")
    }

    /// Order of `i` as a group element.
    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Transports the group along `sigma`; `sigma` must fix 1 to keep the
    /// identity in position 1.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        assert_eq!(sigma.apply(1), 1, "relabeling must fix the identity");
        Self::new_unchecked(self.table.relabel(sigma))
    }
}

/// `(i,j,k)` with `(ij)k ≠ i(jk)`, first in lexicographic order.
pub fn associativity_witness(c: &SquareTable) -> Option<[usize; 3]> {
    let n = c.order();
    for i in 1..=n {
        for j in 1..=n {
            let ij = c.get(i, j);
            for k in 1..=n {
                if c.get(ij, k) != c.get(i, c.get(j, k)) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

pub fn is_associative(c: &SquareTable) -> bool {
    associativity_witness(c).is_none()
}

/// `(i,j)` with `ij ≠ ji`, `i < j`.
pub fn commutativity_witness(c: &SquareTable) -> Option<[usize; 2]> {
    let n = c.order();
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| [i, j]))
        .find(|&[i, j]| c.get(i, j) != c.get(j, i))
}

pub fn is_commutative(c: &SquareTable) -> bool {
    commutativity_witness(c).is_none()
}

/// First row, then first column, lacking the identity element 1.
pub fn inverse_witness(c: &SquareTable) -> Option<(Line, usize)> {
    let n = c.order();
    if let Some(i) = (1..=n).find(|&i| !c.row(i).contains(&1)) {
        return Some((Line::Row, i));
    }
    (1..=n)
        .find(|&j| !(1..=n).any(|i| c.get(i, j) == 1))
        .map(|j| (Line::Column, j))
}

pub fn has_inverses(c: &SquareTable) -> bool {
    inverse_witness(c).is_none()
}

fn latin_witness(c: &SquareTable) -> Option<GroupViolation> {
    let n = c.order();
    for line in [Line::Row, Line::Column] {
        for index in 1..=n {
            let mut seen = vec![false; n + 1];
            for k in 1..=n {
                let value = match line {
                    Line::Row => c.get(index, k),
                    Line::Column => c.get(k, index),
                };
                if std::mem::replace(&mut seen[value], true) {
                    return Some(GroupViolation::NotLatin { line, index, value });
                }
            }
        }
    }
    None
}

fn first_group_violation(c: &SquareTable) -> Option<GroupViolation> {
    let n = c.order();
    if let Some(i) = (1..=n).find(|&i| c.get(1, i) != i || c.get(i, 1) != i) {
        return Some(GroupViolation::Identity { i });
    }
    if let Some((line, index)) = inverse_witness(c) {
        return Some(GroupViolation::MissingInverse { line, index });
    }
    if let Some(v) = latin_witness(c) {
        return Some(v);
    }
    associativity_witness(c).map(|[i, j, k]| GroupViolation::NotAssociative { i, j, k })
}

/// Validates a standard-form group table (commutativity not required).
///
/// Checks run in the order identity, inverses, Latin property,
/// associativity; the first failure is reported.
pub fn validate_group(c: SquareTable) -> Result<CayleyMatrix> {
    match first_group_violation(&c) {
        Some(v) => Err(v.into()),
        None => Ok(CayleyMatrix { table: c }),
    }
}

/// [`validate_group`] followed by a commutativity check.
pub fn validate_abelian_group(c: SquareTable) -> Result<CayleyMatrix> {
    let g = validate_group(c)?;
    match commutativity_witness(&g.table) {
        Some([i, j]) => Err(GroupViolation::NotCommutative { i, j }.into()),
        None => Ok(g),
    }
}

/// `Z_n` with `i · j = ((i−1) + (j−1) mod n) + 1`.
pub fn cyclic_group(n: usize) -> CayleyMatrix {
    CayleyMatrix::new_unchecked(SquareTable::from_fn(n, |i, j| (i - 1 + j - 1) % n + 1))
}

/// Cartesian product; the pair `(x, y)` gets label `(x−1)·|b| + y`.
pub fn direct_product(a: &CayleyMatrix, b: &CayleyMatrix) -> CayleyMatrix {
    let m = b.order();
    let split = |i: usize| ((i - 1) / m + 1, (i - 1) % m + 1);
    let table = SquareTable::from_fn(a.order() * m, |i, j| {
        let (ia, ib) = split(i);
        let (ja, jb) = split(j);
        (a.mul(ia, ja) - 1) * m + b.mul(ib, jb)
    });
    CayleyMatrix::new_unchecked(table)
}

/// Whether `phi(c[i][j]) = c[phi(i)][phi(j)]` for all `i, j`.
pub fn is_group_automorphism(phi: &Permutation, c: &CayleyMatrix) -> bool {
    let n = c.order();
    phi.len() == n
        && (1..=n)
            .all(|i| (1..=n).all(|j| phi.apply(c.mul(i, j)) == c.mul(phi.apply(i), phi.apply(j))))
}

pub fn group_inverse(c: &CayleyMatrix, i: usize) -> usize {
    c.inverse(i)
}

/// Default order cap for [`automorphism_group`].
pub const AUTOMORPHISM_CAP: usize = 10;

/// Every automorphism of `c`, in lexicographic order of image vectors.
///
/// Images are assigned to `2, 3, ..., n` in turn; a candidate image must
/// have the same element order and keep every already-decidable product
/// consistent. Refuses groups larger than `cap`.
pub fn automorphism_group(c: &CayleyMatrix, cap: usize) -> Result<Vec<Permutation>> {
    let n = c.order();
    if n > cap {
        return Err(Error::SizeCap {
            what: "group",
            order: n,
            cap,
        });
    }
    let orders: Vec<usize> = (0..=n)
        .map(|i| if i == 0 { 0 } else { c.element_order(i) })
        .collect();
    let mut image = vec![0usize; n + 1];
    image[1] = 1;
    let mut used = vec![false; n + 1];
    used[1] = true;
    let mut out = Vec::new();
    extend_automorphism(c, &orders, 2, &mut image, &mut used, &mut out);
    Ok(out)
}

fn extend_automorphism(
    c: &CayleyMatrix,
    orders: &[usize],
    pos: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    let n = c.order();
    if pos > n {
        out.push(Permutation::new(image[1..].to_vec()).expect("injective by construction"));
        return;
    }
    for v in 2..=n {
        if used[v] || orders[v] != orders[pos] {
            continue;
        }
        image[pos] = v;
        let consistent = (1..=pos).all(|i| {
            (1..=pos).all(|j| {
                let k = c.mul(i, j);
                k > pos || image[k] == c.mul(image[i], image[j])
            })
        });
        if consistent {
            used[v] = true;
            extend_automorphism(c, orders, pos + 1, image, used, out);
            used[v] = false;
        }
    }
    image[pos] = 0;
}
