//! Exact-arithmetic toolkit for weak and strong Lefschetz properties of
//! weighted-graded Artinian algebras and modules over the rationals.
//!
//! The layers build on each other:
//!
//! - [`exactlinalg`]: dense rational matrices, echelon forms, subspaces,
//!   and Jordan profiles of nilpotent operators;
//! - [`polyring`]: weighted multivariate polynomials, Buchberger bases,
//!   and quotient presentations by standard monomials;
//! - [`graded`]: graded modules with commuting generator actions,
//!   Hilbert-series analytics (Sperner numbers, dual decompositions), and
//!   the weak/strong Lefschetz decision procedures with witness search;
//! - [`constructions`]: associated graded rings, central simple module
//!   filtrations, tensor products and thickenings, free extensions,
//!   power-sum and monomial complete intersections, and the built-in
//!   verification suite cross-checking each construction's expected
//!   transfer behavior.
//!
//! Every decision is exact: ranks and kernels are computed over the
//! rationals with no floating point, so a `certified_yes`/`certified_no`
//! verdict is a proof, while `probable_no` only records an exhausted
//! randomized search.

pub mod constructions;
pub mod exactlinalg;
pub mod graded;
pub mod polyring;
