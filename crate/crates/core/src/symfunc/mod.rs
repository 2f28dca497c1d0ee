//! The ring of symmetric functions over `Q(q, t)` in the power-sum basis.

mod change;
mod pimap;

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use change::{p_to_m_coeff, transition, Transition};
pub use pimap::{apply_pi, lift_to_lambda, power_sum_poly, PiMap, PiVariant};

use crate::partitions::Partition;
use crate::scalar::{one_minus_monomial, RatQT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymFuncError {
    #[error("alphabet too small: need N > {degree}, got N = {n}")]
    AlphabetTooSmall { degree: usize, n: usize },
    #[error("round trip mismatch after lifting")]
    RoundTrip,
    #[error(transparent)]
    Poly(#[from] crate::polyengine::PolyError),
}

/// `Σ c_μ p_μ`, a finite sum of power-sum products (not necessarily homogeneous).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFuncP {
    terms: BTreeMap<Partition, RatQT>,
}

impl SymFuncP {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(RatQT::one())
    }

    pub fn constant(c: RatQT) -> Self {
        Self::term(Partition::empty(), c)
    }

    /// `c · p_μ`.
    pub fn term(mu: Partition, c: RatQT) -> Self {
        let mut s = Self::zero();
        if !c.is_zero() {
            s.terms.insert(mu, c);
        }
        s
    }

    /// `p_μ`.
    pub fn p(mu: Partition) -> Self {
        Self::term(mu, RatQT::one())
    }

    /// `p_n`.
    pub fn p_n(n: usize) -> Self {
        Self::p(Partition::from([n]))
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatQT> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> RatQT {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    /// Largest `|μ|` in the support (0 for the zero function).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.size()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, mu: Partition, c: &RatQT) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mu).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &RatQT) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|c| c * s)
    }

    pub fn map_coeffs<F: Fn(&RatQT) -> RatQT>(&self, f: F) -> Self {
        SymFuncP {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.union(m2), &(c1 * c2));
            }
        }
        out
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: usize) -> Self {
        SymFuncP {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.size() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keep components of degree at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        SymFuncP {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.size() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `t ↦ 1/t` in every coefficient.
    pub fn subst_t_inverse(&self) -> Self {
        self.map_coeffs(|c| c.subst_t_inv())
    }

    /// `∂/∂p_n`.
    pub fn d_dp(&self, n: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.multiplicity(n);
            if k > 0 {
                out.add_term(m.remove_part(n).unwrap(), &(c * &RatQT::from_int(k as i64)));
            }
        }
        out
    }

    /// `p_n^*`, the adjoint of multiplication by `p_n`: `n (1-q^n)/(1-t^n) ∂/∂p_n`.
    pub fn p_n_adjoint(&self, n: usize) -> Self {
        self.d_dp(n).scale(&adjoint_factor(n))
    }

    /// `f^*(self)` where `f^*` is adjoint to multiplication by `f`.
    pub fn apply_adjoint_of(&self, f: &SymFuncP) -> Self {
        let mut out = Self::zero();
        for (mu, c) in &f.terms {
            let mut g = self.clone();
            for &n in mu.parts() {
                g = g.p_n_adjoint(n);
                if g.is_zero() {
                    break;
                }
            }
            out = out.add(&g.scale(c));
        }
        out
    }

    /// Expansion in monomial symmetric functions `m_λ`.
    pub fn to_monomial(&self) -> BTreeMap<Partition, RatQT> {
        let mut out: BTreeMap<Partition, RatQT> = BTreeMap::new();
        for (mu, c) in &self.terms {
            let tr = transition(mu.size());
            for lam in &tr.parts {
                let k = p_to_m_coeff(mu, lam);
                if k != 0.into() {
                    let e = out.entry(lam.clone()).or_default();
                    *e = &*e + &(c * &RatQT::from_int(k));
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Build from an expansion in monomial symmetric functions.
    pub fn from_monomial(coeffs: &BTreeMap<Partition, RatQT>) -> Self {
        let mut out = Self::zero();
        for (lam, c) in coeffs {
            out = out.add(&monomial_func(lam).scale(c));
        }
        out
    }

    /// Terms sorted by degree, then partition, both descending.
    pub fn sorted_terms(&self) -> Vec<(Partition, RatQT)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| (b.0.size(), &b.0).cmp(&(a.0.size(), &a.0)));
        v
    }
}

/// `n (1-q^n)/(1-t^n)`.
pub fn adjoint_factor(n: usize) -> RatQT {
    let n = n as i64;
    RatQT::from_int(n) * one_minus_monomial(n, 0) / one_minus_monomial(0, n)
}

/// `m_λ` in the power-sum basis.
pub fn monomial_func(lambda: &Partition) -> SymFuncP {
    let tr = transition(lambda.size());
    let row = &tr.m_in_p[tr.index[lambda]];
    let mut out = SymFuncP::zero();
    for (mu, c) in tr.parts.iter().zip(row) {
        if *c.numer() != 0.into() {
            out.add_term(mu.clone(), &RatQT::from_rational(c));
        }
    }
    out
}

/// `⟨p_μ, p_ν⟩ = δ_{μν} z_μ Π_j (1 - q^{μ_j})/(1 - t^{μ_j})`.
pub fn p_norm(mu: &Partition) -> RatQT {
    let mut acc = RatQT::from_int(mu.z());
    for &m in mu.parts() {
        let m = m as i64;
        acc = acc * one_minus_monomial(m, 0) / one_minus_monomial(0, m);
    }
    acc
}

/// The `(q, t)` inner product.
pub fn inner_product_qt(a: &SymFuncP, b: &SymFuncP) -> RatQT {
    let mut acc = RatQT::zero();
    for (mu, c) in &a.terms {
        if let Some(d) = b.terms.get(mu) {
            acc = acc + c * d * p_norm(mu);
        }
    }
    acc
}

impl fmt::Display for SymFuncP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*p{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFuncP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFuncP[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    terms: Vec<(Partition, RatQT)>,
}

impl Serialize for SymFuncP {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: "p".into(),
            terms: self.sorted_terms(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFuncP {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(d)?;
        if raw.basis != "p" {
            return Err(D::Error::custom(format!("unsupported basis {:?}", raw.basis)));
        }
        let mut out = SymFuncP::zero();
        for (m, c) in raw.terms {
            out.add_term(m, &c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests;
