//! Finite quandles, standard-form Cayley tables, and the search for
//! Alexander presentations.
//!
//! A finite quandle is Alexander when its elements carry an abelian group
//! structure and an automorphism `φ` with `a ▷ b = φ(a) + b − φ(b)`.
//! [`search::alexander_presentations`] decides this for a quandle matrix and
//! lists every such structure with the identity at element 1;
//! [`obstruction::obstruction_check`] is a cheaper, one-sided test that can
//! certify failure.
//!
//! All labels are 1-based, as in the matrix notation.

pub mod cli;
pub mod error;
pub mod group;
pub mod matrix_file;
pub mod obstruction;
pub mod quandle;
pub mod search;
pub mod table;

pub use error::{Error, GroupViolation, MalformedTable, QuandleViolation, Result};
pub use group::{
    automorphism_group, cyclic_group, direct_product, group_inverse, has_inverses, is_associative,
    is_commutative, is_group_automorphism, validate_abelian_group, validate_group, CayleyMatrix,
};
pub use obstruction::{explain_trace, obstruction_check, ObstructionStatus, ObstructionVerdict};
pub use quandle::{
    conj_quandle, count_homs, dihedral_quandle, enumerate_quandles, is_quandle_hom, is_quandle_iso,
    trivial_quandle, validate_quandle, HomCap, QuandleMatrix,
};
pub use search::{
    alexander_presentations, alexander_quandle, apply_lemma_constraints, find_zero,
    propagate_group_axioms, seed_partial, zero_fill, AlexanderPresentation, PartialCayley,
    SearchOutcome, SearchStatus,
};
pub use table::{Permutation, SquareTable};
