use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::witness::{self, Witness};
use super::{run_check, CheckReport, Params};
use crate::bases::{inhom_f, inhom_f_func, x_spec, BasisError, FRoute, TVariant};
use crate::partitions::{partitions_of, Partition};
use crate::polyengine::{Group, MPoly};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::SymFuncP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratingKind {
    E,
    H,
}

impl FromStr for GeneratingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "E" | "e" => Ok(GeneratingKind::E),
            "H" | "h" => Ok(GeneratingKind::H),
            other => Err(format!("unknown generating kind '{other}'")),
        }
    }
}

/// Polynomials in `u` with `MPoly` coefficients.
fn mul_upoly(a: &[MPoly], b: &[MPoly], order: Option<usize>) -> Vec<MPoly> {
    let spec = a[0].spec().clone();
    let mut len = a.len() + b.len() - 1;
    if let Some(o) = order {
        len = len.min(o + 1);
    }
    let mut out = vec![MPoly::zero(&spec); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < len && !x.is_zero() && !y.is_zero() {
                out[i + j].add_assign_ref(&x.mul(y));
            }
        }
    }
    out
}

fn first_diff(lhs: &[MPoly], rhs: &[MPoly]) -> Option<Witness> {
    let spec = lhs[0].spec().clone();
    let zero = MPoly::zero(&spec);
    (0..lhs.len().max(rhs.len())).find_map(|k| {
        let a = lhs.get(k).unwrap_or(&zero);
        let b = rhs.get(k).unwrap_or(&zero);
        witness::polys(a, b).map(|w| Witness {
            monomial: format!("u^{k}*{}", w.monomial),
            ..w
        })
    })
}

/// `Σ_{i_1<…<i_k} Π_s (x_{i_s} - t^{s+1-k-i_s})`.
pub(crate) fn elementary_closed_form(k: usize, n: usize) -> MPoly {
    let spec = x_spec(n);
    let mut acc = MPoly::zero(&spec);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut term = MPoly::one(&spec);
        let idx = (0..n).filter(|i| mask & (1 << i) != 0);
        for (s, i) in idx.enumerate() {
            let (s, i) = (s as i64 + 1, i as i64 + 1);
            let c = RatQT::t_pow(s + 1 - k as i64 - i);
            term = term.mul(&MPoly::var(&spec, Group::X, (i - 1) as usize).sub(&MPoly::constant(&spec, c)));
        }
        acc.add_assign_ref(&term);
    }
    acc
}

/// Generating identity for `E_k = F_{(1^k)}` (cross-multiplied; `order` unused) or
/// for `H_n = F_{(n)}` (power series in `u` up to `order`).
pub fn check_generating(kind: GeneratingKind, n: usize, order: usize) -> CheckReport {
    let params = Params::new().with("kind", kind).with("N", n).with("order", order);
    run_check("generating", params, || match kind {
        GeneratingKind::E => generating_e(n),
        GeneratingKind::H => generating_h(n, order),
    })
}

fn generating_e(n: usize) -> Result<Option<Witness>, BasisError> {
    let spec = x_spec(n);
    let c = |v: RatQT| MPoly::constant(&spec, v);
    // Σ_k E_k Π_{s=k}^{N-1} (u + t^{-s}) = Π_i (u + x_i).
    let mut lhs = vec![MPoly::zero(&spec)];
    for k in 0..=n {
        let lam = Partition::new(vec![1; k]).expect("column");
        let e = inhom_f(&lam, n, FRoute::Definition)?;
        let closed = if k == 0 {
            MPoly::one(&spec)
        } else {
            elementary_closed_form(k, n)
        };
        if let Some(w) = witness::polys(&e, &closed) {
            return Ok(Some(Witness {
                monomial: format!("E_{k} closed form, {}", w.monomial),
                ..w
            }));
        }
        let mut term = vec![e];
        for s in k..n {
            term = mul_upoly(&term, &[c(RatQT::t_pow(-(s as i64))), MPoly::one(&spec)], None);
        }
        lhs = add_upoly(&lhs, &term);
    }
    let mut rhs = vec![MPoly::one(&spec)];
    for i in 0..n {
        rhs = mul_upoly(&rhs, &[MPoly::var(&spec, Group::X, i), MPoly::one(&spec)], None);
    }
    Ok(first_diff(&lhs, &rhs))
}

fn add_upoly(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let spec = a[0].spec().clone();
    let zero = MPoly::zero(&spec);
    (0..a.len().max(b.len()))
        .map(|k| a.get(k).unwrap_or(&zero).add(b.get(k).unwrap_or(&zero)))
        .collect()
}

fn generating_h(n: usize, order: usize) -> Result<Option<Witness>, BasisError> {
    let spec = x_spec(n);
    let c = |v: RatQT| MPoly::constant(&spec, v);
    let lhs: Vec<MPoly> = (0..=order)
        .map(|k| inhom_f(&Partition::new(vec![k]).expect("row"), n, FRoute::Definition))
        .collect::<Result<_, _>>()?;
    // (1 - t x u)/(1 - x u) = 1 + Σ_{k≥1} (1 - t) x^k u^k.
    let mut prod = vec![MPoly::one(&spec)];
    for i in 0..n {
        let x = MPoly::var(&spec, Group::X, i);
        let series: Vec<MPoly> = (0..=order)
            .map(|k| {
                if k == 0 {
                    MPoly::one(&spec)
                } else {
                    x.pow(k as u32).scale(&one_minus_monomial(0, 1))
                }
            })
            .collect();
        prod = mul_upoly(&prod, &series, Some(order));
    }
    let inv = RatQT::one() / one_minus_monomial(0, 1);
    let front = [c(inv.clone()), c(RatQT::t_pow(1 - n as i64).neg() * &inv)];
    let mut rhs = mul_upoly(&prod, &front, Some(order));
    let tail = RatQT::t() * &inv;
    rhs[0] = rhs[0].sub(&c(tail.clone()));
    if order >= 1 {
        rhs[1] = rhs[1].add(&c(tail));
    }
    Ok(first_diff(&lhs, &rhs))
}

/// `Σ_n H_n(·; t) u^n = (1/(1-t)) exp(Σ_m (1 - t^m) p_m u^m/m) - t(1-u)/(1-t)` up to `u^order`.
pub fn check_generating_lambda(order: usize) -> CheckReport {
    run_check(
        "generating_lambda",
        Params::new().with("kind", "H").with("order", order),
        || {
            let inv = RatQT::one() / one_minus_monomial(0, 1);
            for k in 0..=order {
                let lhs = inhom_f_func(&Partition::new(vec![k]).expect("row"), TVariant::T)?;
                let mut rhs = SymFuncP::zero();
                for mu in partitions_of(k) {
                    let mut coef = &inv / &RatQT::from_int(mu.z());
                    for &m in mu.parts() {
                        coef = coef * one_minus_monomial(0, m as i64);
                    }
                    rhs.add_term(mu, &coef);
                }
                match k {
                    0 => rhs = rhs.sub(&SymFuncP::constant(RatQT::t() * &inv)),
                    1 => rhs = rhs.add(&SymFuncP::constant(RatQT::t() * &inv)),
                    _ => {}
                }
                if let Some(w) = witness::funcs(&lhs, &rhs) {
                    return Ok::<_, BasisError>(Some(Witness {
                        monomial: format!("u^{k}*{}", w.monomial),
                        ..w
                    }));
                }
            }
            Ok(None)
        },
    )
}
