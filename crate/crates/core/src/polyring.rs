//! Weighted polynomial rings over the rationals and their Artinian
//! quotients.
//!
//! A [`RingSpec`] fixes variable names and positive integer weights; the
//! weighted degree of a monomial is the weight-weighted exponent sum.
//! [`Polynomial`] stores terms sorted under the one monomial order used
//! everywhere here, weighted-degree-first with a reverse-lexicographic
//! tie-break. [`GroebnerBasis`] runs Buchberger's algorithm on homogeneous
//! generators, and [`QuotientPresentation`] turns a zero-dimensional
//! quotient into explicit data: the sorted standard monomial basis and one
//! exact multiplication matrix per variable. The [`symmetric`] module
//! supplies elementary and power-sum families and rewrites symmetric
//! polynomials over the elementary basis, where they pick up the weights
//! `deg e_i = i`.

pub mod groebner;
pub mod parse;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod symmetric;

pub use groebner::{GroebnerBasis, MonomialOrder};
pub use parse::{parse_polynomial, PolyParseError};
pub use poly::Polynomial;
pub use quotient::QuotientPresentation;
pub use ring::{Monomial, RingSpec};

use thiserror::Error;

/// Errors from ring construction, polynomial arithmetic, and quotient
/// presentation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("a polynomial ring needs at least one variable")]
    EmptyRing,
    #[error("{names} variable names but {weights} weights")]
    WeightCountMismatch { names: usize, weights: usize },
    #[error("variable weights must be positive")]
    ZeroWeight,
    #[error("invalid variable name `{name}`")]
    BadVariableName { name: String },
    #[error("duplicate variable `{name}`")]
    DuplicateVariable { name: String },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("substitution expected {expected} images, got {got}")]
    SubstitutionArity { expected: usize, got: usize },
    #[error("no generators given")]
    EmptyGeneratorList,
    #[error("generator `{poly}` is not homogeneous")]
    InhomogeneousGenerator { poly: String },
    #[error("all generators reduce to zero; the ideal is (0)")]
    ZeroIdeal,
    #[error("quotient is not finite dimensional; no pure power of: {variables}")]
    NotArtinian { variables: String },
    #[error("symmetric family index {index} out of range for {vars} variables")]
    SymmetricIndexOutOfRange { index: usize, vars: usize },
    #[error("power sum recursion needs m > n; got m = {m} with n = {vars}")]
    NewtonIndexTooSmall { m: u32, vars: usize },
    #[error("`{poly}` is not symmetric in the variables")]
    NotSymmetric { poly: String },
}
