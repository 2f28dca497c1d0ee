use std::sync::LazyLock;

use super::hl::{hl_numerator, hl_p, hl_prefactor};
use super::interp::interp_monomial_coeffs;
use super::{memo_poly, x_spec, BasisError, FRoute, Key, TVariant};
use crate::cache::Memo;
use crate::partitions::{enumerate_ssyt, psi_weight, subpartitions, tau_coeff, Partition};
use crate::polyengine::{determinant, divide_antisymmetric, symmetrize, Group, MPoly};
use crate::scalar::RatQT;
use crate::symfunc::{lift_to_lambda, PiMap, PiVariant, SymFuncP};

static ROUTES: LazyLock<Memo<Key, MPoly>> = LazyLock::new(Memo::new);
static F_FUNC: LazyLock<Memo<Partition, SymFuncP>> = LazyLock::new(Memo::new);

fn route_tag(route: FRoute) -> &'static str {
    match route {
        FRoute::Definition => "inhom_f_definition",
        FRoute::TauExpansion => "inhom_f_tau",
        FRoute::Tableau => "inhom_f_tableau",
        FRoute::Determinantal => "inhom_f_det",
    }
}

fn compute(lambda: &Partition, n: usize, route: FRoute) -> Result<MPoly, BasisError> {
    let spec = x_spec(n);
    if lambda.len() > n {
        return Ok(MPoly::zero(&spec));
    }
    if lambda.is_empty() {
        return Ok(MPoly::one(&spec));
    }
    memo_poly(&ROUTES, Key::new(route_tag(route), lambda, n), || {
        let p = match route {
            FRoute::Definition => by_definition(lambda, n),
            FRoute::TauExpansion => by_tau(lambda, n),
            FRoute::Tableau => by_tableau(lambda, n),
            FRoute::Determinantal => by_determinant(lambda, n)?,
        };
        assert!(
            p.terms().values().all(is_laurent_in_t),
            "inhomogeneous Hall-Littlewood coefficients must lie in Z[t, 1/t]"
        );
        Ok(p)
    })
}

fn is_laurent_in_t(c: &RatQT) -> bool {
    let d = c.denom();
    d.num_terms() == 1 && d.q_degree() == Some(0) && c.numer().q_degree() == Some(0) && {
        let (_, _, lc) = d.leading_term().unwrap();
        *lc == num_bigint::BigInt::from(1)
    }
}

/// Symmetrize `Π_{i≤k} (x_i^{λ_i} - t^{1-N} x_i^{λ_i - 1}) Π_{i<j} (x_i - t x_j)`.
fn by_definition(lambda: &Partition, n: usize) -> MPoly {
    let spec = x_spec(n);
    let shift = RatQT::t_pow(1 - n as i64);
    let mut lead = MPoly::one(&spec);
    for (i, &l) in lambda.parts().iter().enumerate() {
        let x = MPoly::var(&spec, Group::X, i);
        let xl = x.pow(l as u32 - 1);
        lead = lead.mul(&xl.mul(&x.sub(&MPoly::constant(&spec, shift.clone()))));
    }
    symmetrize(&hl_numerator(&spec, lead)).scale(&hl_prefactor(lambda, n))
}

/// `Σ_μ τ_{λ/μ}(t; N) P_μ`.
fn by_tau(lambda: &Partition, n: usize) -> MPoly {
    let spec = x_spec(n);
    let mut acc = MPoly::zero(&spec);
    for mu in subpartitions(lambda) {
        let c = tau_coeff(lambda, &mu, n);
        if !c.is_zero() {
            acc.add_scaled(&hl_p(&mu, n), &c);
        }
    }
    acc
}

/// `Σ_T ψ_T(t) Π_{(i,j)} (x_{T(i,j)} - δ_{j1} t^{T(i,j) - N - i + 1})`.
fn by_tableau(lambda: &Partition, n: usize) -> MPoly {
    let spec = x_spec(n);
    let mut acc = MPoly::zero(&spec);
    for tab in enumerate_ssyt(lambda, n, |_, _, _| true) {
        let mut term = MPoly::constant(&spec, psi_weight(&tab));
        for (i, j) in lambda.cells() {
            let e = tab.entry(i, j);
            let mut f = MPoly::var(&spec, Group::X, e - 1);
            if j == 1 {
                let c = RatQT::t_pow(e as i64 - n as i64 - i as i64 + 1);
                f = f.sub(&MPoly::constant(&spec, c));
            }
            term = term.mul(&f);
        }
        acc.add_assign_ref(&term);
    }
    acc
}

/// `(1/V) det[x_j^{N-i-1} (t^{1-i} T_{x_j} + x_j - t^{1-N})] P_λ`, where `T_{x_j}`
/// sets `x_j = 0`. Expanding each column over the two summands gives a sum over
/// subsets `S` of columns carrying `T`.
fn by_determinant(lambda: &Partition, n: usize) -> Result<MPoly, BasisError> {
    let spec = x_spec(n);
    let p = hl_p(lambda, n);
    let shift = MPoly::constant(&spec, RatQT::t_pow(1 - n as i64));
    let mut acc = MPoly::zero(&spec);
    for mask in 0u32..(1 << n) {
        let mut ps = p.clone();
        for j in 0..n {
            if mask & (1 << j) != 0 {
                ps = ps.set_zero(Group::X, j);
            }
        }
        if ps.is_zero() {
            continue;
        }
        let m: Vec<Vec<MPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let x = MPoly::var(&spec, Group::X, j);
                        let xp = x.pow((n - 1 - i) as u32);
                        if mask & (1 << j) != 0 {
                            xp.scale(&RatQT::t_pow(-(i as i64)))
                        } else {
                            xp.mul(&x.sub(&shift))
                        }
                    })
                    .collect()
            })
            .collect();
        acc.add_assign_ref(&determinant(&spec, &m).mul(&ps));
    }
    Ok(divide_antisymmetric(&acc, 1)?)
}

/// `F_λ(x_1..x_n; t)` by the chosen route. Routes other than the definition are
/// compared against it; a disagreement is reported as an error.
pub fn inhom_f(lambda: &Partition, n: usize, route: FRoute) -> Result<MPoly, BasisError> {
    let p = compute(lambda, n, route)?;
    if route != FRoute::Definition {
        let reference = compute(lambda, n, FRoute::Definition)?;
        if reference != p {
            return Err(mismatch(lambda, n, FRoute::Definition, &reference, route, &p));
        }
    }
    Ok(p)
}

fn mismatch(lambda: &Partition, n: usize, a: FRoute, pa: &MPoly, b: FRoute, pb: &MPoly) -> BasisError {
    BasisError::RouteMismatch {
        lambda: lambda.clone(),
        n,
        first: a,
        second: b,
        first_value: pa.to_string(),
        second_value: pb.to_string(),
    }
}

/// `F_λ(x_1..x_n; t)` computed by all four routes, which must agree.
pub fn inhom_f_all_routes(lambda: &Partition, n: usize) -> Result<MPoly, BasisError> {
    let reference = compute(lambda, n, FRoute::Definition)?;
    for route in &FRoute::ALL[1..] {
        let p = compute(lambda, n, *route)?;
        if p != reference {
            return Err(mismatch(lambda, n, FRoute::Definition, &reference, *route, &p));
        }
    }
    Ok(reference)
}

/// The inhomogeneous Hall-Littlewood function `F_λ(·; t)` or `F_λ(·; 1/t)`.
pub fn inhom_f_func(lambda: &Partition, variant: TVariant) -> Result<SymFuncP, BasisError> {
    let f = F_FUNC.get_or_try_insert_with(lambda, || {
        let n = lambda.size() + 1;
        let poly = compute(lambda, n, FRoute::Definition)?;
        Ok::<_, BasisError>(lift_to_lambda(&poly, &PiMap::new(PiVariant::Hl, n))?)
    })?;
    Ok(match variant {
        TVariant::T => f,
        TVariant::TInverse => f.subst_t_inverse(),
    })
}

/// `lim_{q→0} I_{λ|n}(x; 1/q, 1/t)`.
pub fn limit_q0_interp(lambda: &Partition, n: usize) -> Result<MPoly, BasisError> {
    let coeffs = interp_monomial_coeffs(lambda, n)?;
    let mut out = std::collections::BTreeMap::new();
    for (mu, c) in coeffs.iter() {
        let v = c
            .subst_q_inv()
            .subst_t_inv()
            .eval_q0()
            .map_err(|_| BasisError::PoleAtQ0 {
                lambda: lambda.clone(),
                n,
            })?;
        if !v.is_zero() {
            out.insert(mu.clone(), v);
        }
    }
    Ok(MPoly::from_monomial_basis(&x_spec(n), &out))
}

pub(crate) fn clear_memos() {
    ROUTES.clear();
    F_FUNC.clear();
}
