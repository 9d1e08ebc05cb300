//! Exact linear algebra over the rationals: dense matrices, echelon forms,
//! subspaces, and nilpotent Jordan profiles.

pub mod jordan;
pub mod matrix;
pub mod subspace;

pub use jordan::{nilpotent_jordan_profile, JordanProfile};
pub use matrix::{int, rational, RationalMatrix, Scalar};
pub use subspace::{intersection, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("rows have unequal lengths")]
    RaggedRows,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("claimed subspace is not contained in the larger space")]
    ContainmentFailure,
    #[error("matrix of dimension {dim} is not nilpotent")]
    NotNilpotent { dim: usize },
}
