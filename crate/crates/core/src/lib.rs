//! Exact computations with left Leibniz algebras and Lie-Yamaguti (LY) algebras
//! over the rationals.
//!
//! Algebras are given by structure constants; representations by families of
//! matrices. Everything is checked and constructed in exact rational
//! arithmetic: axiom checkers report the precise basis tuples where an
//! identity fails, constructors re-verify the preconditions they rely on, and
//! the equivalence decider either exhibits an invertible intertwiner or
//! certifies that none exists.
//!
//! All values are immutable after construction and safe to share across
//! threads; every operation is a pure function.

pub mod algebra;
pub mod equiv;
mod error;
pub mod matrix;
pub mod rat;
pub mod rep;
pub mod tensor;

pub use algebra::{
    catalog, check_left_leibniz, check_ly, leibniz_to_ly, random_leibniz, Algebra, AxiomReport,
    LYAlgebra, Violation,
};
pub use equiv::{
    decide_equivalence_leibniz, decide_equivalence_leibniz_with_budget, decide_equivalence_ly,
    decide_equivalence_ly_with_budget, intertwiner_space_leibniz, intertwiner_space_ly,
    psi_intertwines_d, psi_intertwines_leibniz, psi_intertwines_ly, verify_induced_equivalence,
    EquivStatus, EquivalenceVerdict, IntertwinerSpace, DEFAULT_GRID_BUDGET,
};
pub use error::Error;
pub use matrix::Matrix;
pub use rat::{format_rat, parse_rat, rat, ratio, Rat};
pub use rep::{
    adjoint_rep, antisymmetric_rep_from, check_leibniz_rep, check_ly_rep, classify_symmetry,
    conjugate_rep, d_from_r1, dual_rep, induce_ly_rep, ly_adjoint_rep, symmetric_rep_from,
    LYRep, LeibnizRep, SymmetryClass,
};
pub use tensor::{bilinear_apply, trilinear_apply, Tensor3, Tensor4};
