//! Interpolation Macdonald operators `D_N`, `A_N`, the Macdonald difference
//! operators `H_N^r`, and the hierarchy `A^k` acting on symmetric functions.

pub(crate) mod finite;
mod infinite;
mod useries;

pub use finite::{apply_an, apply_dn, apply_hn, dn_components};
pub use infinite::{apply_ainfty, apply_ak, eigen_ck, eigenvalue, eigenvalue_numerator, vertex_a1, EigenData};
pub use useries::{factor_poly, mul_scalar_polys, SeriesCoeff, USeries};

use crate::bases::BasisError;
use crate::partitions::Partition;
use crate::polyengine::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error("operator expects a polynomial in {expected} variables, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("{0}")]
    Range(String),
    #[error("eigenvalue expansion for {mu} fails at u^{order}")]
    EigenExpansion { mu: Partition, order: usize },
    #[error("vertex operator form gives {vertex}, hierarchy gives {hierarchy}")]
    VertexMismatch { vertex: String, hierarchy: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

pub(crate) fn clear_memos() {
    finite::clear_memos();
    infinite::clear_memos();
}

#[cfg(test)]
mod tests;
