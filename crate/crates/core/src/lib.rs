//! Exact computation of abelian subalgebra and ideal invariants of
//! finite-dimensional Zinbiel algebras.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod rewriter;
