//! The specialization homomorphisms from symmetric functions to `N` variables,
//! and their inverses on low degrees.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{monomial_func, SymFuncError, SymFuncP};
use crate::polyengine::{Group, MPoly, VarSpec};
use crate::scalar::{one_minus_monomial, RatQT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PiVariant {
    /// `p_m ↦ p_m(x) + t^{-mN}/(1 - t^{-m})`.
    Hl,
    /// `p_m ↦ p_m(x) + t^{mN}/(1 - t^m)`.
    Interp,
    /// `p_m ↦ p_m(x)`.
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiMap {
    pub variant: PiVariant,
    pub n: usize,
}

impl PiMap {
    pub fn new(variant: PiVariant, n: usize) -> Self {
        PiMap { variant, n }
    }

    /// The constant added to `p_m(x)`.
    pub fn shift(&self, m: usize) -> RatQT {
        let (m, n) = (m as i64, self.n as i64);
        match self.variant {
            PiVariant::Hl => RatQT::t_pow(-m * n) / one_minus_monomial(0, -m),
            PiVariant::Interp => RatQT::t_pow(m * n) / one_minus_monomial(0, m),
            PiVariant::Plain => RatQT::zero(),
        }
    }

    pub fn spec(&self) -> Arc<VarSpec> {
        Arc::new(VarSpec::x(self.n))
    }
}

/// `p_m(x_1..x_N)` in the given spec.
pub fn power_sum_poly(spec: &Arc<VarSpec>, m: usize) -> MPoly {
    let n = spec.arity(Group::X);
    let mut p = MPoly::zero(spec);
    for i in 0..n {
        p.add_assign_ref(&MPoly::var(spec, Group::X, i).pow(m as u32));
    }
    p
}

/// Image of `f` under the homomorphism.
pub fn apply_pi(map: &PiMap, f: &SymFuncP) -> MPoly {
    let spec = map.spec();
    let mut images: Vec<Option<MPoly>> = Vec::new();
    let mut out = MPoly::zero(&spec);
    for (mu, c) in f.terms() {
        let mut term = MPoly::constant(&spec, c.clone());
        for &m in mu.parts() {
            if images.len() <= m {
                images.resize(m + 1, None);
            }
            let img =
                images[m].get_or_insert_with(|| power_sum_poly(&spec, m).add(&MPoly::constant(&spec, map.shift(m))));
            term = term.mul(img);
        }
        out.add_assign_ref(&term);
    }
    out
}

/// The unique `g` of degree at most `deg f` with `apply_pi(map, g) = f`.
pub fn lift_to_lambda(f: &MPoly, map: &PiMap) -> Result<SymFuncP, SymFuncError> {
    let degree = f.degree_in(Group::X) as usize;
    let n = f.spec().arity(Group::X);
    if n != map.n {
        return Err(crate::polyengine::PolyError::IncompatibleSpecs.into());
    }
    if n <= degree {
        return Err(SymFuncError::AlphabetTooSmall { degree, n });
    }
    let coeffs = f.to_monomial_basis()?;
    // f as a polynomial in the power sums p_m(x) of the alphabet.
    let mut in_x = SymFuncP::zero();
    for (lam, c) in &coeffs {
        in_x = in_x.add(&monomial_func(lam).scale(c));
    }
    // Substitute p_m(x) = p_m - shift_m.
    let mut out = SymFuncP::zero();
    for (mu, c) in in_x.terms() {
        let mut term = SymFuncP::constant(c.clone());
        for &m in mu.parts() {
            let factor = SymFuncP::p_n(m).sub(&SymFuncP::constant(map.shift(m)));
            term = term.mul(&factor);
        }
        out = out.add(&term);
    }
    if apply_pi(map, &out) != *f {
        return Err(SymFuncError::RoundTrip);
    }
    Ok(out)
}
