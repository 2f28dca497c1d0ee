//! Sparse multivariate polynomials over `Q(q, t)` in named variable groups.

mod mono;
mod mpoly;
pub mod symmetrize;
mod varspec;

use std::sync::Arc;

pub use mono::Mono;
pub use mpoly::MPoly;
pub use symmetrize::{
    determinant, divide_antisymmetric, kostka_row, monomial_symmetric, permutations_with_sign, schur, symmetrize,
    symmetrize_by_division, symmetrize_template, vandermonde,
};
pub use varspec::{Group, VarGroup, VarSpec};

use crate::scalar::RatQT;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("incompatible variable specs")]
    IncompatibleSpecs,
    #[error("inexact division")]
    InexactDivision,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("divisor involves a degree-capped group")]
    CappedDivisor,
    #[error("polynomial is not symmetric in x")]
    Asymmetric,
    #[error("polynomial involves variables outside the x group")]
    NotPureX,
    #[error("group {0} needs a finite degree cap")]
    UnboundedCap(Group),
}

/// Truncated series of `Π_{l=1}^{M} (1 - a·x_j·y_l) / (1 - b·x_j·y_l)` in the
/// `y` group, which must carry a finite degree cap.
pub fn ratio_series_factor(spec: &Arc<VarSpec>, j: usize, a: &RatQT, b: &RatQT) -> Result<MPoly, PolyError> {
    let cap = spec.cap(Group::Y).ok_or(PolyError::UnboundedCap(Group::Y))?;
    let m = spec.arity(Group::Y);
    let x = MPoly::var(spec, Group::X, j);
    let mut acc = MPoly::one(spec);
    for l in 0..m {
        let z = x.mul(&MPoly::var(spec, Group::Y, l));
        // (1 - a z)/(1 - b z) = 1 + Σ_{k≥1} (b^k - a b^{k-1}) z^k
        let mut factor = MPoly::one(spec);
        let mut zk = MPoly::one(spec);
        let mut bk1 = RatQT::one();
        for _ in 1..=cap {
            zk = zk.mul(&z);
            if zk.is_zero() {
                break;
            }
            let bk = &bk1 * b;
            factor.add_scaled(&zk, &(&bk - &(a * &bk1)));
            bk1 = bk;
        }
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// `Π_l (1 - t x_j y_l)/(1 - x_j y_l)`, or its reciprocal.
pub fn geom_series_factor(spec: &Arc<VarSpec>, j: usize, reciprocal: bool) -> Result<MPoly, PolyError> {
    let (a, b) = (RatQT::t(), RatQT::one());
    if reciprocal {
        ratio_series_factor(spec, j, &b, &a)
    } else {
        ratio_series_factor(spec, j, &a, &b)
    }
}
