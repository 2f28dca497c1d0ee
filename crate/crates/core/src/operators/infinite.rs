use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use super::useries::{factor_poly, mul_scalar_polys, USeries};
use super::OperatorError;
use crate::bases::{hl_q_func, inhom_f_func, TVariant};
use crate::cache::Memo;
use crate::linalg::solve;
use crate::partitions::{partitions_bounded, partitions_of, Partition};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::SymFuncP;

static ADJ_TERMS: LazyLock<Memo<Partition, (SymFuncP, SymFuncP)>> = LazyLock::new(Memo::new);

/// Eigenvalue data of the operators at infinity on `I_μ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenData {
    #[serde(rename = "mu")]
    pub mu: Partition,
    pub ck: Vec<RatQT>,
}

impl EigenData {
    /// `c_k`, with `c_k = 0` beyond `ℓ(μ)` and `c_0 = 1`.
    pub fn coefficient(&self, k: usize) -> RatQT {
        match k {
            0 => RatQT::one(),
            _ => self.ck.get(k - 1).cloned().unwrap_or_else(RatQT::zero),
        }
    }
}

/// Numerator `Π_{i=1}^{ℓ} (q^{μ_i} - t^{i-1} u)` as coefficients in `u`; the
/// denominator is `(u; t)_ℓ`.
pub fn eigenvalue_numerator(mu: &Partition) -> Vec<RatQT> {
    let mut acc = vec![RatQT::one()];
    for (i, &m) in mu.parts().iter().enumerate() {
        acc = mul_scalar_polys(&acc, &[RatQT::q_pow(m as i64), RatQT::t_pow(i as i64).neg()]);
    }
    acc
}

/// The eigenvalue `Π_{i=1}^{ℓ(μ)} (q^{μ_i} - t^{i-1} u)/(1 - t^{i-1} u)` as a series in `u`.
pub fn eigenvalue(mu: &Partition) -> USeries<RatQT> {
    USeries::new(eigenvalue_numerator(mu), (0..mu.len() as i64).collect())
}

/// Expansion `eigenvalue(μ) = 1 + Σ_{k=1}^{ℓ(μ)} c_k / (u; t)_k`.
pub fn eigen_ck(mu: &Partition) -> Result<EigenData, OperatorError> {
    let l = mu.len();
    if l == 0 {
        return Ok(EigenData {
            mu: mu.clone(),
            ck: Vec::new(),
        });
    }
    let order = l + 3;
    let target = eigenvalue(mu).taylor(order);
    // Taylor coefficients of 1 / (u; t)_k.
    let basis: Vec<Vec<RatQT>> = (1..=l)
        .map(|k| USeries::new(vec![RatQT::one()], (0..k as i64).collect()).taylor(order))
        .collect();
    let a: Vec<Vec<RatQT>> = (1..=l).map(|m| basis.iter().map(|b| b[m].clone()).collect()).collect();
    let rhs: Vec<RatQT> = (1..=l).map(|m| target[m].clone()).collect();
    let ck = solve(&a, &rhs).map_err(|_| OperatorError::EigenExpansion {
        mu: mu.clone(),
        order: 1,
    })?;
    for m in std::iter::once(0).chain(l + 1..=order) {
        let mut v = if m == 0 { RatQT::one() } else { RatQT::zero() };
        for (b, c) in basis.iter().zip(&ck) {
            v += &(&b[m] * c);
        }
        if v != target[m] {
            return Err(OperatorError::EigenExpansion {
                mu: mu.clone(),
                order: m,
            });
        }
    }
    Ok(EigenData { mu: mu.clone(), ck })
}

/// `(F_λ(·; 1/t), Q_λ(·; 1/t))`.
fn hierarchy_term(lambda: &Partition) -> Result<(SymFuncP, SymFuncP), OperatorError> {
    ADJ_TERMS.get_or_try_insert_with(lambda, || {
        let f = inhom_f_func(lambda, TVariant::TInverse)?;
        let q = hl_q_func(lambda).subst_t_inverse();
        Ok((f, q))
    })
}

/// `A^k f = Σ_{ℓ(λ)=k} t^{|λ|} F_λ(·; 1/t) Q_λ(·; 1/t)^* f`.
pub fn apply_ak(k: usize, f: &SymFuncP) -> Result<SymFuncP, OperatorError> {
    if k == 0 {
        return Err(OperatorError::Range("k must be at least 1".into()));
    }
    let mut acc = SymFuncP::zero();
    for d in k..=f.degree() {
        for lambda in partitions_bounded(d, k, d).into_iter().filter(|l| l.len() == k) {
            let (fl, ql) = hierarchy_term(&lambda)?;
            let lowered = f.apply_adjoint_of(&ql);
            if lowered.is_zero() {
                continue;
            }
            acc = acc.add(&fl.mul(&lowered).scale(&RatQT::t_pow(d as i64)));
        }
    }
    Ok(acc)
}

/// `A_∞(u) f = f + Σ_{k≥1} A^k f / (u; t)_k`, over the common denominator `(u; t)_K`, `K = deg f`.
pub fn apply_ainfty(f: &SymFuncP) -> Result<USeries<SymFuncP>, OperatorError> {
    let top = f.degree();
    let mut num = vec![SymFuncP::zero(); top + 1];
    let add = |num: &mut Vec<SymFuncP>, g: &SymFuncP, extra: Vec<i64>| {
        for (j, c) in factor_poly(&extra).iter().enumerate() {
            num[j] = num[j].add(&g.scale(c));
        }
    };
    add(&mut num, f, (0..top as i64).collect());
    for k in 1..=top {
        let g = apply_ak(k, f)?;
        if !g.is_zero() {
            add(&mut num, &g, (k as i64..top as i64).collect());
        }
    }
    Ok(USeries::new(num, (0..top as i64).collect()))
}

/// `Σ_{μ ⊢ n} Π_i (1 - t^{-μ_i}) p_μ / z_μ`, the `z^n` coefficient of the raising exponential.
fn raising(n: usize) -> SymFuncP {
    let mut out = SymFuncP::zero();
    for mu in partitions_of(n) {
        let mut c = RatQT::one() / RatQT::from_int(mu.z());
        for &m in mu.parts() {
            c = c * one_minus_monomial(0, -(m as i64));
        }
        out.add_term(mu, &c);
    }
    out
}

/// The `z^{-n}` coefficient of the lowering exponential `exp(Σ_m z^{-m} (q^m - 1) ∂/∂p_m)` applied to `f`.
fn lowering(n: usize, f: &SymFuncP) -> SymFuncP {
    let mut out = SymFuncP::zero();
    for mu in partitions_of(n) {
        let mut g = f.clone();
        for &m in mu.parts() {
            g = g.d_dp(m);
            if g.is_zero() {
                break;
            }
        }
        if g.is_zero() {
            continue;
        }
        let mut c = RatQT::one();
        for &m in mu.parts() {
            c = c * one_minus_monomial(m as i64, 0).neg();
        }
        for (_, k) in mu.multiplicities() {
            c = c / RatQT::from_int(factorial(k));
        }
        out = out.add(&g.scale(&c));
    }
    out
}

fn factorial(k: usize) -> num_bigint::BigInt {
    (1..=k).fold(num_bigint::BigInt::from(1), |a, b| a * b)
}

/// `A^1` as the constant term of a product of vertex operators:
/// `t/(t-1) CT[E_+(z) E_-(z)] - t/(t-1) + (1-q)/(1-t) ∂/∂p_1`, checked against [`apply_ak`].
pub fn vertex_a1(f: &SymFuncP) -> Result<SymFuncP, OperatorError> {
    let mut ct = SymFuncP::zero();
    for n in 0..=f.degree() {
        let low = lowering(n, f);
        if !low.is_zero() {
            ct = ct.add(&raising(n).mul(&low));
        }
    }
    let pref = RatQT::t() / (RatQT::t() - RatQT::one());
    let d1 = f.d_dp(1).scale(&(one_minus_monomial(1, 0) / one_minus_monomial(0, 1)));
    let out = ct.sub(f).scale(&pref).add(&d1);
    let reference = apply_ak(1, f)?;
    if out != reference {
        return Err(OperatorError::VertexMismatch {
            vertex: out.to_string(),
            hierarchy: reference.to_string(),
        });
    }
    Ok(out)
}

pub(crate) fn clear_memos() {
    ADJ_TERMS.clear();
}
