//! Graded modules over a graded algebra, their Hilbert series analytics,
//! and the weak and strong Lefschetz decision procedures.
//!
//! A [`GradedModule`] is a finite-dimensional graded vector space together
//! with commuting multiplication matrices for the algebra generators and a
//! designated basis of the degree-1 component. A [`LinearForm`] is a
//! rational coefficient vector over that basis. The weak Lefschetz question
//! asks for a form whose slice maps are all injective or surjective; the
//! strong question asks for a form whose centered power maps
//! `V_{a+i} -> V_{b-i}` are all bijective. Both reduce to exact rank
//! computations, and for symmetric unimodal Hilbert series the strong
//! property is equivalent to the Jordan profile of the form matching the
//! dual decomposition of the series, which is cross-checked wherever it
//! applies.

pub mod hilbert;
pub mod module;
pub mod witness;

pub use hilbert::{q_integer, q_integer_divides, rebuild_hilbert, HilbertSeries, SpernerData};
pub use module::{GeneratorAction, GradedModule, LinearForm};
pub use witness::{
    find_lefschetz_witness, LefschetzMode, SearchConfig, WitnessReport, WitnessStatus,
};

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::exactlinalg::LinalgError;

/// Errors from module construction and Lefschetz analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("generator `{generator}` breaks the grading at entry ({row}, {col})")]
    BlockStructure { generator: String, row: usize, col: usize },
    #[error("generator actions `{left}` and `{right}` do not commute")]
    NonCommuting { left: String, right: String },
    #[error("degree-one descriptor entry {index} is not a degree-1 generator")]
    BadDegreeOneIndex { index: usize },
    #[error("linear form has {got} coefficients, the degree-one basis has {expected}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("the Hilbert series is not symmetric")]
    NotSymmetric,
    #[error("the Hilbert series is not unimodal")]
    NotUnimodal,
    #[error("the series is zero")]
    EmptySeries,
    #[error("block length {block} has the wrong parity for the degree range")]
    StripParity { block: usize },
    #[error("largest block is {block}, the degree range requires {expected}")]
    StripExtent { block: usize, expected: usize },
    #[error("the degree-1 component is zero; no linear forms exist")]
    NoLinearForms,
    #[error("the defining series quotient is not a polynomial")]
    SeriesNotDivisible,
    #[error("the series quotient has a negative coefficient; the degrees do not cut out an Artinian quotient")]
    SeriesNegativeCoefficient,
}

/// Canonical text form of a rational: `num/den`, denominator omitted when 1.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
