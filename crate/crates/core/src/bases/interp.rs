use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use super::special::{special_values, SpecialValue};
use super::{memo_poly, x_spec, BasisError, Key};
use crate::cache::Memo;
use crate::linalg::{solve, LinalgError};
use crate::partitions::{partitions_bounded, Partition};
use crate::polyengine::symmetrize::distinct_permutations;
use crate::polyengine::MPoly;
use crate::scalar::{PolyQT, RatQT};
use crate::symfunc::{lift_to_lambda, PiMap, PiVariant, SymFuncP};

type Coeffs = BTreeMap<Partition, RatQT>;

static COEFFS: LazyLock<Memo<(Partition, usize), Arc<Coeffs>>> = LazyLock::new(Memo::new);
static MONO_AT: LazyLock<Memo<(Partition, Partition, usize), RatQT>> = LazyLock::new(Memo::new);
static VALUE_AT: LazyLock<Memo<(Partition, Partition, usize), RatQT>> = LazyLock::new(Memo::new);
static INTERP: LazyLock<Memo<Key, MPoly>> = LazyLock::new(Memo::new);
static INTERP_FUNC: LazyLock<Memo<Partition, SymFuncP>> = LazyLock::new(Memo::new);

/// The point `(q^{-ν_1}, q^{-ν_2} t, …, q^{-ν_n} t^{n-1})`.
pub fn partition_point(nu: &Partition, n: usize) -> Vec<RatQT> {
    nu.padded(n)
        .iter()
        .enumerate()
        .map(|(i, &v)| RatQT::monomial(-(v as i64), i as i64))
        .collect()
}

/// `m_μ` at the point of `ν`; a Laurent polynomial in `q, t`.
fn monomial_at(mu: &Partition, nu: &Partition, n: usize) -> RatQT {
    MONO_AT.get_or_insert_with(&(mu.clone(), nu.clone(), n), || {
        let e: Vec<u16> = mu.padded(n).iter().map(|&x| x as u16).collect();
        let nu = nu.padded(n);
        let mut terms: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for perm in distinct_permutations(&e) {
            let qe: i64 = perm.iter().zip(&nu).map(|(&a, &b)| -(a as i64) * b as i64).sum();
            let te: i64 = perm.iter().enumerate().map(|(i, &a)| a as i64 * i as i64).sum();
            *terms.entry((qe, te)).or_default() += 1;
        }
        let qmin = terms.keys().map(|k| k.0).min().unwrap_or(0);
        let tmin = terms.keys().map(|k| k.1).min().unwrap_or(0);
        let poly = PolyQT::from_terms(
            terms
                .iter()
                .map(|(&(a, b), &c)| ((a - qmin) as usize, (b - tmin) as usize, c)),
        );
        RatQT::from_poly(poly) * RatQT::monomial(qmin, tmin)
    })
}

fn value_of(coeffs: &Coeffs, nu: &Partition, n: usize) -> RatQT {
    let mut acc = RatQT::zero();
    for (mu, c) in coeffs {
        acc += &(c * &monomial_at(mu, nu, n));
    }
    acc
}

/// Partitions of size below `d` with at most `n` parts, smallest first.
fn lower_points(d: usize, n: usize) -> Vec<Partition> {
    (0..d).flat_map(|k| partitions_bounded(k, n, k)).collect()
}

/// `I_{μ|n}` evaluated at the point of `ν`.
pub fn interp_value(mu: &Partition, nu: &Partition, n: usize) -> Result<RatQT, BasisError> {
    let key = (mu.clone(), nu.clone(), n);
    VALUE_AT.get_or_try_insert_with(&key, || {
        let c = interp_monomial_coeffs(mu, n)?;
        Ok(value_of(&c, nu, n))
    })
}

/// Given `g`, find `Σ_ρ a_ρ I_ρ` over `|ρ| < d` such that `g + Σ a_ρ I_ρ` vanishes
/// at every point of size below `d`. Points are processed by size, where the
/// values `I_ρ(ν)` vanish for `|ν| ≤ |ρ|, ν ≠ ρ`, so each step has one unknown.
fn lower_correction(
    g_values: &dyn Fn(&Partition) -> RatQT,
    lower: &[Partition],
    n: usize,
) -> Result<Vec<RatQT>, BasisError> {
    let mut a: Vec<RatQT> = Vec::with_capacity(lower.len());
    for (k, nu) in lower.iter().enumerate() {
        let mut acc = g_values(nu);
        for (rho, ar) in lower[..k].iter().zip(&a) {
            if rho.size() < nu.size() && !ar.is_zero() {
                acc += &(ar * &interp_value(rho, nu, n)?);
            }
        }
        let diag = interp_value(nu, nu, n)?;
        if diag.is_zero() {
            return Err(BasisError::Degenerate);
        }
        a.push((acc / &diag).neg());
    }
    Ok(a)
}

/// Coefficients of `I_{λ|n}` in the monomial basis.
pub fn interp_monomial_coeffs(lambda: &Partition, n: usize) -> Result<Arc<Coeffs>, BasisError> {
    if lambda.len() > n {
        return Err(BasisError::TooLong {
            lambda: lambda.clone(),
            n,
        });
    }
    COEFFS.get_or_try_insert_with(&(lambda.clone(), n), || solve_interp(lambda, n).map(Arc::new))
}

fn solve_interp(lambda: &Partition, n: usize) -> Result<Coeffs, BasisError> {
    let d = lambda.size();
    let lower = lower_points(d, n);
    let top: Vec<Partition> = partitions_bounded(d, n, d)
        .into_iter()
        .filter(|mu| mu != lambda && mu.dominated_by(lambda))
        .collect();
    let same_size: Vec<Partition> = partitions_bounded(d, n, d)
        .into_iter()
        .filter(|nu| nu != lambda)
        .collect();

    // For each top-degree generator m_μ: the lower correction and the residual
    // values at the remaining points of size d.
    let mut gens: Vec<Partition> = vec![lambda.clone()];
    gens.extend(top.iter().cloned());
    let mut corrections: Vec<Vec<RatQT>> = Vec::new();
    let mut residuals: Vec<Vec<RatQT>> = Vec::new();
    for g in &gens {
        let a = lower_correction(&|nu| monomial_at(g, nu, n), &lower, n)?;
        let mut res = Vec::with_capacity(same_size.len());
        for nu in &same_size {
            let mut v = monomial_at(g, nu, n);
            for (rho, ar) in lower.iter().zip(&a) {
                if !ar.is_zero() {
                    v += &(ar * &interp_value(rho, nu, n)?);
                }
            }
            res.push(v);
        }
        corrections.push(a);
        residuals.push(res);
    }

    let c: Vec<RatQT> = if top.is_empty() {
        if residuals[0].iter().any(|v| !v.is_zero()) {
            return Err(BasisError::Degenerate);
        }
        Vec::new()
    } else {
        let a: Vec<Vec<RatQT>> = (0..same_size.len())
            .map(|r| (1..gens.len()).map(|k| residuals[k][r].clone()).collect())
            .collect();
        let b: Vec<RatQT> = residuals[0].iter().map(|v| v.neg()).collect();
        solve(&a, &b).map_err(|e| match e {
            LinalgError::Singular | LinalgError::Inconsistent => BasisError::Degenerate,
        })?
    };

    let mut out: Coeffs = BTreeMap::new();
    let mut add = |mu: &Partition, v: &RatQT| {
        if v.is_zero() {
            return;
        }
        let e = out.entry(mu.clone()).or_default();
        *e = &*e + v;
    };
    add(lambda, &RatQT::one());
    for (mu, cm) in top.iter().zip(&c) {
        add(mu, cm);
    }
    for (j, rho) in lower.iter().enumerate() {
        let mut coef = corrections[0][j].clone();
        for (k, cm) in c.iter().enumerate() {
            coef += &(cm * &corrections[k + 1][j]);
        }
        if coef.is_zero() {
            continue;
        }
        for (mu, v) in interp_monomial_coeffs(rho, n)?.iter() {
            add(mu, &(&coef * v));
        }
    }
    out.retain(|_, v| !v.is_zero());

    let at_lambda = value_of(&out, lambda, n);
    if at_lambda != special_values(lambda, n, &SpecialValue::CNorm) {
        return Err(BasisError::Normalization {
            lambda: lambda.clone(),
            n,
        });
    }
    Ok(out)
}

/// The interpolation Macdonald polynomial `I_{λ|n}(x; q, t)`.
pub fn interp_macdonald(lambda: &Partition, n: usize) -> Result<MPoly, BasisError> {
    let coeffs = interp_monomial_coeffs(lambda, n)?;
    memo_poly(&INTERP, Key::new("interp", lambda, n), || {
        Ok(MPoly::from_monomial_basis(&x_spec(n), &coeffs))
    })
}

/// The interpolation Macdonald function `I_λ(·; q, t)`.
pub fn interp_func(lambda: &Partition) -> Result<SymFuncP, BasisError> {
    INTERP_FUNC.get_or_try_insert_with(lambda, || {
        let n = lambda.size() + 1;
        Ok(lift_to_lambda(
            &interp_macdonald(lambda, n)?,
            &PiMap::new(PiVariant::Interp, n),
        )?)
    })
}

pub(crate) fn clear_memos() {
    COEFFS.clear();
    MONO_AT.clear();
    VALUE_AT.clear();
    INTERP.clear();
    INTERP_FUNC.clear();
}
