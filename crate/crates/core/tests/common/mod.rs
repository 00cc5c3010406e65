//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on plain `Vec<Vec<usize>>` tables (1-based labels)
//! and re-derives the algebra from scratch, so results can be compared
//! against the library without sharing its code paths.

#![allow(dead_code)]

use alexq::{
    automorphism_group, cyclic_group, direct_product, CayleyMatrix, Permutation, QuandleMatrix,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rows = Vec<Vec<usize>>;

fn at(t: &Rows, i: usize, j: usize) -> usize {
    t[i - 1][j - 1]
}

pub fn oracle_is_quandle(t: &Rows) -> bool {
    let n = t.len();
    for i in 1..=n {
        if at(t, i, i) != i {
            return false;
        }
    }
    for j in 1..=n {
        let mut col: Vec<usize> = (1..=n).map(|i| at(t, i, j)).collect();
        col.sort();
        if col != (1..=n).collect::<Vec<_>>() {
            return false;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if at(t, at(t, i, j), k) != at(t, at(t, i, k), at(t, j, k)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every `n x n` table over `1..=n` (n^(n²) of them), filtered by the axioms.
pub fn brute_force_quandles(n: usize) -> Vec<Rows> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut t = vec![vec![0; n]; n];
        for idx in 0..cells {
            t[idx / n][idx % n] = c % n + 1;
            c /= n;
        }
        if oracle_is_quandle(&t) {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// Tables whose columns are permutations fixing the diagonal (the only
/// candidates), filtered by the full axiom check.
pub fn column_brute_force_quandles(n: usize) -> Vec<Rows> {
    let perms = all_permutations(n);
    let per_col: Vec<Vec<&Vec<usize>>> = (1..=n)
        .map(|j| perms.iter().filter(|p| p[j - 1] == j).collect())
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let t: Rows = (0..n)
            .map(|i| (0..n).map(|j| per_col[j][idx[j]][i]).collect())
            .collect();
        if oracle_is_quandle(&t) {
            out.push(t);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                out.sort();
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < per_col[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

pub fn oracle_is_abelian_group(t: &Rows) -> bool {
    let n = t.len();
    for i in 1..=n {
        if at(t, 1, i) != i || at(t, i, 1) != i {
            return false;
        }
        if !(1..=n).any(|j| at(t, i, j) == 1) || !(1..=n).any(|j| at(t, j, i) == 1) {
            return false;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if at(t, i, j) != at(t, j, i) {
                return false;
            }
            for k in 1..=n {
                if at(t, at(t, i, j), k) != at(t, i, at(t, j, k)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Zero table with row 1 and column 1 reading `1..=n`.
fn bordered(n: usize) -> Rows {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if i == 1 {
                        j
                    } else if j == 1 {
                        i
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// All standard-form abelian group tables of order `n` by scanning every
/// interior filling (n^((n−1)²) candidates). Practical for n ≤ 4.
pub fn brute_force_abelian_tables(n: usize) -> Vec<Rows> {
    let interior = (n - 1) * (n - 1);
    let total = n.pow(interior as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut t = bordered(n);
        for idx in 0..interior {
            t[1 + idx / (n - 1)][1 + idx % (n - 1)] = c % n + 1;
            c /= n;
        }
        if oracle_is_abelian_group(&t) {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// All standard-form abelian group tables of order `n`, scanning reduced
/// Latin squares (first row and column fixed) instead of all fillings.
/// Practical for n ≤ 6.
pub fn latin_abelian_tables(n: usize) -> Vec<Rows> {
    fn rec(n: usize, t: &mut Rows, pos: usize, out: &mut Vec<Rows>) {
        let interior = (n - 1) * (n - 1);
        if pos == interior {
            if oracle_is_abelian_group(t) {
                out.push(t.clone());
            }
            return;
        }
        let (i, j) = (1 + pos / (n - 1), 1 + pos % (n - 1));
        for v in 1..=n {
            if (0..j).any(|c| t[i][c] == v) || (0..i).any(|r| t[r][j] == v) {
                continue;
            }
            // symmetric fill: only the upper triangle is free
            if j < i && t[j][i] != v {
                continue;
            }
            t[i][j] = v;
            rec(n, t, pos + 1, out);
            t[i][j] = 0;
        }
    }
    let mut t = bordered(n);
    let mut out = Vec::new();
    rec(n, &mut t, 0, &mut out);
    out.sort();
    out
}

fn oracle_inverse(c: &Rows, x: usize) -> usize {
    (1..=c.len()).find(|&m| at(c, x, m) == 1).unwrap()
}

/// `φ(a) + b − φ(b)` evaluated directly from the group table.
pub fn oracle_alexander(c: &Rows, phi: &[usize]) -> Rows {
    let n = c.len();
    (1..=n)
        .map(|a| {
            (1..=n)
                .map(|b| {
                    let pb = phi[b - 1];
                    at(c, at(c, phi[a - 1], b), oracle_inverse(c, pb))
                })
                .collect()
        })
        .collect()
}

pub fn oracle_is_automorphism(c: &Rows, phi: &[usize]) -> bool {
    let n = c.len();
    (1..=n).all(|i| (1..=n).all(|j| phi[at(c, i, j) - 1] == at(c, phi[i - 1], phi[j - 1])))
}

/// Presentations of `q` with identity 1: every abelian table from `tables`
/// for which the first column of `q` is an automorphism reproducing `q`.
pub fn oracle_presentations(q: &Rows, tables: &[Rows]) -> Vec<(Rows, Vec<usize>)> {
    let phi: Vec<usize> = q.iter().map(|row| row[0]).collect();
    let mut out: Vec<(Rows, Vec<usize>)> = tables
        .iter()
        .filter(|c| oracle_is_automorphism(c, &phi) && oracle_alexander(c, &phi) == *q)
        .map(|c| (c.clone(), phi.clone()))
        .collect();
    out.sort();
    out
}

/// Number of maps `1..=m → 1..=n` preserving the operation, by full scan.
pub fn oracle_count_homs(src: &Rows, dst: &Rows) -> u64 {
    let m = src.len();
    let n = dst.len();
    let total = n.pow(m as u32);
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let f: Vec<usize> = (0..m)
            .map(|_| {
                let v = c % n + 1;
                c /= n;
                v
            })
            .collect();
        let ok =
            (1..=m).all(|i| (1..=m).all(|j| f[at(src, i, j) - 1] == at(dst, f[i - 1], f[j - 1])));
        if ok {
            count += 1;
        }
    }
    count
}

/// Automorphisms by scanning all permutations fixing 1.
pub fn oracle_automorphism_count(c: &Rows) -> usize {
    all_permutations(c.len())
        .into_iter()
        .filter(|p| p[0] == 1 && oracle_is_automorphism(c, p))
        .count()
}

/// Groups of order ≤ 8 built from cyclic groups and direct products.
pub fn corpus_groups() -> Vec<CayleyMatrix> {
    let z = cyclic_group;
    let mut groups: Vec<CayleyMatrix> = (1..=8).map(z).collect();
    groups.push(direct_product(&z(2), &z(2)));
    groups.push(direct_product(&z(2), &z(3)));
    groups.push(direct_product(&z(3), &z(2)));
    groups.push(direct_product(&z(2), &z(4)));
    groups.push(direct_product(&z(4), &z(2)));
    groups.push(direct_product(&direct_product(&z(2), &z(2)), &z(2)));
    groups
}

/// Every `(group, automorphism)` pair over [`corpus_groups`].
pub fn corpus_pairs() -> Vec<(CayleyMatrix, Permutation)> {
    corpus_groups()
        .into_iter()
        .flat_map(|g| {
            automorphism_group(&g, 10)
                .unwrap()
                .into_iter()
                .map(move |phi| (g.clone(), phi))
        })
        .collect()
}

pub fn quandle(rows: &Rows) -> QuandleMatrix {
    QuandleMatrix::from_rows(rows).unwrap()
}

pub fn klein_twist_rows() -> Rows {
    vec![
        vec![1, 4, 4, 1],
        vec![3, 2, 2, 3],
        vec![2, 3, 3, 2],
        vec![4, 1, 1, 4],
    ]
}

pub fn klein_rows() -> Rows {
    vec![
        vec![1, 2, 3, 4],
        vec![2, 1, 4, 3],
        vec![3, 4, 1, 2],
        vec![4, 3, 2, 1],
    ]
}

pub fn non_alexander_rows() -> Rows {
    vec![vec![1, 1, 2], vec![2, 2, 1], vec![3, 3, 3]]
}

/// S3 as permutations of {1,2,3}: 1 = e, 2 = (12), 3 = (13), 4 = (23),
/// 5 = (123), 6 = (132); product `x·y` applies `y` first.
pub fn s3_rows() -> Rows {
    let perms: [[usize; 3]; 6] = [
        [1, 2, 3],
        [2, 1, 3],
        [3, 2, 1],
        [1, 3, 2],
        [2, 3, 1],
        [3, 1, 2],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap() + 1;
    (0..6)
        .map(|x| {
            (0..6)
                .map(|y| index([0, 1, 2].map(|p| perms[x][perms[y][p] - 1])))
                .collect()
        })
        .collect()
}

/// A uniformly random relabeling of `1..=n`, reproducible from `seed`.
pub fn seeded_permutation(n: usize, seed: u64) -> Permutation {
    let mut image: Vec<usize> = (1..=n).collect();
    image.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Permutation::new(image).unwrap()
}
