//! Recovering Alexander presentations from a quandle matrix.
//!
//! With the additive identity pinned to element 1, the first column of the
//! quandle gives the t-action `φ(i) = i ▷ 1`. Every pair and triple of
//! elements then forces equalities between cells of the unknown Cayley
//! table (`a▷b + b▷a = a + b` and `a▷b + b▷c = a▷c + b`). These equalities,
//! together with commutativity, associativity and the Latin-square property,
//! fill in as much of the table as they can; the remaining unknowns are
//! settled by depth-first branching. Pinning the identity loses nothing:
//! translations `x ↦ x + b` are quandle automorphisms of any Alexander
//! quandle.

mod partial;

use std::collections::HashSet;

pub use partial::{Cell, Contradiction, PartialCayley, PartialError, Rule};

use crate::error::{Error, GroupViolation, Result};
use crate::group::{is_group_automorphism, CayleyMatrix};
use crate::quandle::QuandleMatrix;
use crate::table::{Permutation, SquareTable};

/// An abelian group structure on the quandle's labels together with the
/// automorphism `φ` (the action of t) such that `a ▷ b = φ(a) + b − φ(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlexanderPresentation {
    pub cayley: CayleyMatrix,
    pub phi: Permutation,
}

impl AlexanderPresentation {
    /// Checks that `cayley` is commutative and `phi` is one of its automorphisms.
    pub fn new(cayley: CayleyMatrix, phi: Permutation) -> Result<Self> {
        check_alexander_data(&cayley, &phi)?;
        Ok(Self { cayley, phi })
    }

    pub fn quandle(&self) -> QuandleMatrix {
        build_alexander_quandle(&self.cayley, &self.phi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    /// The quandle fails the abelian condition, so it cannot be Alexander.
    NotAbelian,
    /// Constraint propagation from the seed table hit a contradiction.
    Contradiction,
    /// Propagation succeeded but no completed table yields a presentation.
    NoValidGroup,
    Success,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::NotAbelian => "not-abelian",
            Self::Contradiction => "contradiction",
            Self::NoValidGroup => "no-valid-group",
            Self::Success => "success",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// `(a▷b)▷(c▷d) ≠ (a▷c)▷(b▷d)` at these labels.
    NotAbelian([usize; 4]),
    Contradiction(Contradiction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub presentations: Vec<AlexanderPresentation>,
    pub diagnostic: Option<Diagnostic>,
    /// The Cayley table after the seeding and propagation phase, when reached.
    pub propagated: Option<PartialCayley>,
    /// Completed abelian group tables examined in the final check.
    pub completions: usize,
}

impl SearchOutcome {
    pub fn is_alexander(&self) -> bool {
        self.status == SearchStatus::Success
    }
}

/// The seed table: row and column 1 hold `1..=n`, all else unknown.
pub fn seed_partial(q: &QuandleMatrix) -> PartialCayley {
    PartialCayley::seed(q.order())
}

/// Row-major first unknown cell.
pub fn find_zero(c: &PartialCayley) -> Option<Cell> {
    let n = c.order();
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| c.get(i, j) == 0)
}

/// Cell equalities that an Alexander structure with identity 1 must satisfy.
struct Constraints {
    pairs: Vec<(Cell, Cell, Rule)>,
    phi: Option<Permutation>,
}

impl Constraints {
    /// `c[a▷b][b▷a] = c[a][b]` and `c[a▷b][b▷d] = c[a▷d][b]`.
    fn lemmas(q: &QuandleMatrix) -> Self {
        let n = q.order();
        let mut seen = HashSet::new();
        let mut pairs = Vec::new();
        let mut push = |x: Cell, y: Cell, rule: Rule| {
            let key = if x <= y { (x, y) } else { (y, x) };
            if x != y && seen.insert(key) {
                pairs.push((x, y, rule));
            }
        };
        for a in 1..=n {
            for b in 1..=n {
                push((q.op(a, b), q.op(b, a)), (a, b), Rule::PairSum);
            }
        }
        for a in 1..=n {
            for b in 1..=n {
                for d in 1..=n {
                    push((q.op(a, b), q.op(b, d)), (q.op(a, d), b), Rule::TripleSum);
                }
            }
        }
        Self { pairs, phi: None }
    }

    /// The lemma equalities plus the defining relation `a▷b + φ(b) = φ(a) + b`
    /// and the requirement that `φ = (first column of q)` be additive.
    fn presentation(q: &QuandleMatrix) -> Self {
        let mut out = Self::lemmas(q);
        let n = q.order();
        let phi = q.right_translation(1);
        let mut seen: HashSet<(Cell, Cell)> = out.pairs.iter().map(|&(x, y, _)| (x, y)).collect();
        for a in 1..=n {
            for b in 1..=n {
                let x = (q.op(a, b), phi.apply(b));
                let y = (phi.apply(a), b);
                if x != y && seen.insert((x, y)) {
                    out.pairs.push((x, y, Rule::Reconstruction));
                }
            }
        }
        out.phi = Some(phi);
        out
    }

    fn apply(&self, c: &mut PartialCayley) -> std::result::Result<bool, Contradiction> {
        let mut changed = false;
        for &(x, y, rule) in &self.pairs {
            changed |= c.unify(x, y, rule)?;
        }
        if let Some(phi) = &self.phi {
            let n = c.order();
            for i in 2..=n {
                for j in 2..=n {
                    let v = c.get(i, j);
                    if v != 0 {
                        changed |= c.set(
                            phi.apply(i),
                            phi.apply(j),
                            phi.apply(v),
                            Rule::Automorphism,
                            (i, j),
                        )?;
                    }
                }
            }
        }
        Ok(changed)
    }
}

/// Alternates the extra constraints (if any) with the group-axiom sweep
/// until neither fills a cell. Terminates: each round fills at least one of
/// the at most `n²` unknown cells.
fn saturate(
    c: &mut PartialCayley,
    constraints: Option<&Constraints>,
) -> std::result::Result<(), Contradiction> {
    loop {
        let mut changed = false;
        if let Some(k) = constraints {
            changed |= k.apply(c)?;
        }
        changed |= c.group_pass()?;
        if !changed {
            return Ok(());
        }
    }
}

/// Fills in cells forced by commutativity, associativity and the Latin-square
/// property until nothing changes.
pub fn propagate_group_axioms(
    c: &PartialCayley,
) -> std::result::Result<PartialCayley, Contradiction> {
    c.check_consistent()?;
    let mut out = c.clone();
    saturate(&mut out, None)?;
    Ok(out)
}

/// Unifies the cells related by `a▷b + b▷a = a + b` and
/// `a▷b + b▷c = a▷c + b`, interleaved with [`propagate_group_axioms`], up to
/// a fixpoint. A contradiction means `q` has no Alexander structure at all.
pub fn apply_lemma_constraints(
    q: &QuandleMatrix,
    c: &PartialCayley,
) -> std::result::Result<PartialCayley, Contradiction> {
    assert_eq!(q.order(), c.order(), "quandle and table orders differ");
    c.check_consistent()?;
    let mut out = c.clone();
    saturate(&mut out, Some(&Constraints::lemmas(q)))?;
    Ok(out)
}

/// Every completion of `c` to a standard-form abelian group table.
///
/// Branches on the row-major first unknown cell, trying values in ascending
/// order and propagating the group axioms after each choice. Results come in
/// the order the search reaches them and are pairwise distinct.
pub fn zero_fill(c: &PartialCayley) -> Vec<CayleyMatrix> {
    fill(c, None)
}

fn fill(c: &PartialCayley, constraints: Option<&Constraints>) -> Vec<CayleyMatrix> {
    let mut out = Vec::new();
    if c.check_consistent().is_err() {
        return out;
    }
    let mut root = c.clone();
    if saturate(&mut root, constraints).is_ok() {
        descend(root, constraints, &mut out);
    }
    out
}

fn descend(c: PartialCayley, constraints: Option<&Constraints>, out: &mut Vec<CayleyMatrix>) {
    let Some((i, j)) = find_zero(&c) else {
        if let Some(g) = c.to_cayley() {
            out.push(g);
        }
        return;
    };
    for value in 1..=c.order() {
        let mut child = c.clone();
        if child.set(i, j, value, Rule::Branch, (i, j)).is_err() {
            continue;
        }
        if saturate(&mut child, constraints).is_ok() {
            descend(child, constraints, out);
        }
    }
}

/// All Alexander presentations of `q` with the additive identity at
/// element 1, or the reason there are none.
///
/// Distinct labelings of isomorphic groups are reported separately. Every
/// returned pair reproduces `q` exactly.
pub fn alexander_presentations(q: &QuandleMatrix) -> SearchOutcome {
    let n = q.order();
    if let Some(w) = q.abelian_witness() {
        return SearchOutcome {
            status: SearchStatus::NotAbelian,
            presentations: Vec::new(),
            diagnostic: Some(Diagnostic::NotAbelian(w)),
            propagated: None,
            completions: 0,
        };
    }
    let phi = q.right_translation(1);
    if n == 1 {
        let cayley = CayleyMatrix::new_unchecked(SquareTable::from_fn(1, |_, _| 1));
        return SearchOutcome {
            status: SearchStatus::Success,
            presentations: vec![AlexanderPresentation { cayley, phi }],
            diagnostic: None,
            propagated: Some(PartialCayley::seed(1)),
            completions: 1,
        };
    }

    let seeded = seed_partial(q);
    let propagated = match apply_lemma_constraints(q, &seeded) {
        Ok(c) => c,
        Err(why) => {
            return SearchOutcome {
                status: SearchStatus::Contradiction,
                presentations: Vec::new(),
                diagnostic: Some(Diagnostic::Contradiction(why)),
                propagated: None,
                completions: 0,
            }
        }
    };

    // The branching phase also enforces the defining relation and additivity
    // of φ; both are necessary, so no presentation is lost, and the final
    // checks below still run on every completed table.
    let completions = fill(&propagated, Some(&Constraints::presentation(q)));
    let count = completions.len();
    let presentations: Vec<_> = completions
        .into_iter()
        .filter(|c| is_group_automorphism(&phi, c))
        .filter(|c| build_alexander_quandle(c, &phi) == *q)
        .map(|cayley| AlexanderPresentation {
            cayley,
            phi: phi.clone(),
        })
        .collect();
    SearchOutcome {
        status: if presentations.is_empty() {
            SearchStatus::NoValidGroup
        } else {
            SearchStatus::Success
        },
        presentations,
        diagnostic: None,
        propagated: Some(propagated),
        completions: count,
    }
}

fn check_alexander_data(c: &CayleyMatrix, phi: &Permutation) -> Result<()> {
    if let Some([i, j]) = crate::group::commutativity_witness(c.table()) {
        return Err(GroupViolation::NotCommutative { i, j }.into());
    }
    if !is_group_automorphism(phi, c) {
        return Err(Error::NotAutomorphism {
            image: phi.image().to_vec(),
        });
    }
    Ok(())
}

fn build_alexander_quandle(c: &CayleyMatrix, phi: &Permutation) -> QuandleMatrix {
    let n = c.order();
    let table = SquareTable::from_fn(n, |a, b| {
        let pb = phi.apply(b);
        c.mul(phi.apply(a), c.mul(b, c.inverse(pb)))
    });
    QuandleMatrix::new_unchecked(table)
}

/// The Alexander quandle `a ▷ b = φ(a) + b − φ(b)` on an abelian group.
pub fn alexander_quandle(c: &CayleyMatrix, phi: &Permutation) -> Result<QuandleMatrix> {
    check_alexander_data(c, phi)?;
    Ok(build_alexander_quandle(c, phi))
}
