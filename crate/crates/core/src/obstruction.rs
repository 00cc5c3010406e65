//! Fast certificates that a quandle is not Alexander.
//!
//! In the Alexanderization of `Q` (the free Λ-module on the elements modulo
//! `t·x_i + (1−t)·x_j = x_{i▷j}`), some generators may be forced equal. If
//! two distinct elements collapse, `Q` embeds in no Alexander quandle. This
//! module derives such equalities with four rules and records every step:
//!
//! - R1: `i▷j = i` gives `(1−t)x_i = (1−t)x_j`;
//! - R2: `(1−t)x_a = (1−t)x_b` gives `x_{k▷a} = x_{k▷b}` for every `k`;
//! - R3: `x_i = x_j` gives `(1−t)x_i = (1−t)x_j`, `x_{i▷k} = x_{j▷k}` and
//!   `x_{k▷i} = x_{k▷j}`;
//! - R4: `i▷j = j` with `i ≠ j` gives `x_i = x_j`, since `t` is invertible.
//!
//! The rules are sound but not known to be complete: a quandle on which they
//! find nothing (verdict *inconclusive*) may still fail to be Alexander. Use
//! [`crate::search::alexander_presentations`] for a decision.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::quandle::QuandleMatrix;

/// Disjoint-set forest over `1..=n` with path halving and union by size.
#[derive(Clone, Debug)]
pub struct Partition {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..=n).collect(),
            size: vec![1; n + 1],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Classes as sorted lists, ordered by their smallest element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut copy = self.clone();
        let n = self.parent.len() - 1;
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for x in 1..=n {
            let r = copy.find(x);
            by_root[r].push(x);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort();
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.classes().iter().all(|c| c.len() == 1)
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.classes() == other.classes()
    }
}

impl Eq for Partition {}

/// `E0`: equalities of generators `x_i = x_j`. `E1`: equalities
/// `(1−t)x_i = (1−t)x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    E0,
    E1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Premise {
    /// R1/R4: the table entry `i ▷ j`.
    Entry { i: usize, j: usize },
    /// R2: `(a, b)` already equal in `E1`, multiplied on the left by `k`.
    LeftFactor { a: usize, b: usize, k: usize },
    /// R3: `(i, j)` already equal in `E0`; `k` is `None` for the `E1` lift.
    Equal {
        i: usize,
        j: usize,
        k: Option<usize>,
        right: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
}

/// One derivation: `premise` yields the equality of `pair` at `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: RuleId,
    pub premise: Premise,
    pub level: Level,
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTrace {
    pub n: usize,
    pub e0: Partition,
    pub e1: Partition,
    /// Only steps that joined two previously distinct classes.
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionStatus {
    /// Two distinct elements are equal in the Alexanderization.
    NotInjective,
    /// The rules found no collapse; this is not a proof of anything.
    Inconclusive,
}

impl ObstructionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::NotInjective => "not-injective",
            Self::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub status: ObstructionStatus,
    pub trace: ObstructionTrace,
}

impl ObstructionVerdict {
    /// Non-singleton classes of `E0`.
    pub fn collapsed(&self) -> Vec<Vec<usize>> {
        self.trace
            .e0
            .classes()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }
}

struct Saturation<'a> {
    q: &'a QuandleMatrix,
    e0: Partition,
    e1: Partition,
    steps: Vec<Step>,
    queue: VecDeque<(Level, usize, usize)>,
}

impl Saturation<'_> {
    fn merge(&mut self, level: Level, a: usize, b: usize, rule: RuleId, premise: Premise) {
        let joined = match level {
            Level::E0 => self.e0.union(a, b),
            Level::E1 => self.e1.union(a, b),
        };
        if joined {
            self.steps.push(Step {
                rule,
                premise,
                level,
                pair: (a, b),
            });
            self.queue.push_back((level, a, b));
        }
    }

    fn run(&mut self) {
        let q = self.q;
        let n = q.order();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let premise = Premise::Entry { i, j };
                if q.op(i, j) == i {
                    self.merge(Level::E1, i, j, RuleId::R1, premise);
                }
                if q.op(i, j) == j {
                    self.merge(Level::E0, i, j, RuleId::R4, premise);
                }
            }
        }
        // Transitivity is handled by the partitions, so consequences only
        // need to be drawn from the generating pairs.
        while let Some((level, a, b)) = self.queue.pop_front() {
            match level {
                Level::E1 => {
                    for k in 1..=n {
                        let premise = Premise::LeftFactor { a, b, k };
                        self.merge(Level::E0, q.op(k, a), q.op(k, b), RuleId::R2, premise);
                    }
                }
                Level::E0 => {
                    let lift = Premise::Equal {
                        i: a,
                        j: b,
                        k: None,
                        right: false,
                    };
                    self.merge(Level::E1, a, b, RuleId::R3, lift);
                    for k in 1..=n {
                        let left = Premise::Equal {
                            i: a,
                            j: b,
                            k: Some(k),
                            right: false,
                        };
                        self.merge(Level::E0, q.op(a, k), q.op(b, k), RuleId::R3, left);
                        let right = Premise::Equal {
                            i: a,
                            j: b,
                            k: Some(k),
                            right: true,
                        };
                        self.merge(Level::E0, q.op(k, a), q.op(k, b), RuleId::R3, right);
                    }
                }
            }
        }
    }
}

/// Saturates R1–R4 over `q` and reports whether any two elements collapse.
pub fn obstruction_check(q: &QuandleMatrix) -> ObstructionVerdict {
    let n = q.order();
    let mut sat = Saturation {
        q,
        e0: Partition::new(n),
        e1: Partition::new(n),
        steps: Vec::new(),
        queue: VecDeque::new(),
    };
    sat.run();
    let status = if sat.e0.is_discrete() {
        ObstructionStatus::Inconclusive
    } else {
        ObstructionStatus::NotInjective
    };
    ObstructionVerdict {
        status,
        trace: ObstructionTrace {
            n,
            e0: sat.e0,
            e1: sat.e1,
            steps: sat.steps,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayError {
    #[error("step {index}: premise does not hold at that point")]
    PremiseFails { index: usize },
    #[error("step {index}: conclusion does not follow from the premise")]
    WrongConclusion { index: usize },
    #[error("replayed partitions differ from the recorded ones")]
    FinalMismatch,
}

impl ObstructionTrace {
    /// Re-derives the partitions from scratch, checking each recorded step
    /// against `q` in order.
    pub fn replay(&self, q: &QuandleMatrix) -> Result<(Partition, Partition), ReplayError> {
        let n = q.order();
        let mut e0 = Partition::new(n);
        let mut e1 = Partition::new(n);
        for (index, step) in self.steps.iter().enumerate() {
            let (x, y) = step.pair;
            let expected = match (step.rule, step.premise) {
                (RuleId::R1, Premise::Entry { i, j }) => {
                    (q.op(i, j) == i).then_some((Level::E1, (i, j)))
                }
                (RuleId::R4, Premise::Entry { i, j }) => {
                    (q.op(i, j) == j && i != j).then_some((Level::E0, (i, j)))
                }
                (RuleId::R2, Premise::LeftFactor { a, b, k }) => e1
                    .same(a, b)
                    .then_some((Level::E0, (q.op(k, a), q.op(k, b)))),
                (RuleId::R3, Premise::Equal { i, j, k, right }) => {
                    e0.same(i, j).then(|| match (k, right) {
                        (None, _) => (Level::E1, (i, j)),
                        (Some(k), false) => (Level::E0, (q.op(i, k), q.op(j, k))),
                        (Some(k), true) => (Level::E0, (q.op(k, i), q.op(k, j))),
                    })
                }
                _ => return Err(ReplayError::WrongConclusion { index }),
            };
            let Some((level, pair)) = expected else {
                return Err(ReplayError::PremiseFails { index });
            };
            if level != step.level || pair != (x, y) {
                return Err(ReplayError::WrongConclusion { index });
            }
            match level {
                Level::E0 => e0.union(x, y),
                Level::E1 => e1.union(x, y),
            };
        }
        if e0 != self.e0 || e1 != self.e1 {
            return Err(ReplayError::FinalMismatch);
        }
        Ok((e0, e1))
    }
}

fn gen(i: usize) -> String {
    format!("x{i}")
}

fn explain_step(q: Option<&QuandleMatrix>, step: &Step) -> String {
    let (x, y) = step.pair;
    let conclusion = match step.level {
        Level::E0 => format!("{} = {}", gen(x), gen(y)),
        Level::E1 => format!("(1-t){} = (1-t){}", gen(x), gen(y)),
    };
    let because = match step.premise {
        Premise::Entry { i, j } => match step.rule {
            RuleId::R4 => format!(
                "{i}▷{j} = {j}: t{} + (1-t){} = {} so t{} = t{}",
                gen(i),
                gen(j),
                gen(j),
                gen(i),
                gen(j)
            ),
            _ => format!("{i}▷{j} = {i}: t{} + (1-t){} = {}", gen(i), gen(j), gen(i)),
        },
        Premise::LeftFactor { a, b, k } => {
            let (ka, kb) = q.map_or((x, y), |q| (q.op(k, a), q.op(k, b)));
            format!(
                "{} = t{} + (1-t){} = t{} + (1-t){} = {}",
                gen(ka),
                gen(k),
                gen(a),
                gen(k),
                gen(b),
                gen(kb)
            )
        }
        Premise::Equal { i, j, k: None, .. } => format!("{} = {}", gen(i), gen(j)),
        Premise::Equal {
            i,
            j,
            k: Some(k),
            right: false,
        } => format!(
            "{} = {} gives {i}▷{k} = {j}▷{k} in the module",
            gen(i),
            gen(j)
        ),
        Premise::Equal {
            i,
            j,
            k: Some(k),
            right: true,
        } => format!(
            "{} = {} gives {k}▷{i} = {k}▷{j} in the module",
            gen(i),
            gen(j)
        ),
    };
    let rule = match step.rule {
        RuleId::R1 => "R1",
        RuleId::R2 => "R2",
        RuleId::R3 => "R3",
        RuleId::R4 => "R4",
    };
    format!("{rule}: {because}  =>  {conclusion}")
}

/// One numbered line per step, or a single line when nothing was derived.
pub fn explain_trace(trace: &ObstructionTrace) -> Vec<String> {
    explain_with(None, trace)
}

/// Like [`explain_trace`], spelling out products using `q`.
pub fn explain_trace_for(q: &QuandleMatrix, trace: &ObstructionTrace) -> Vec<String> {
    explain_with(Some(q), trace)
}

fn explain_with(q: Option<&QuandleMatrix>, trace: &ObstructionTrace) -> Vec<String> {
    if trace.steps.is_empty() {
        return vec!["no forced identifications".to_string()];
    }
    trace
        .steps
        .iter()
        .enumerate()
        .map(|(idx, step)| {
            let mut line = String::new();
            let _ = write!(line, "{:>3}. {}", idx + 1, explain_step(q, step));
            line
        })
        .collect()
}
