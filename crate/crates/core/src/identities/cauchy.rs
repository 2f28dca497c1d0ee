use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::witness::{self, Witness};
use super::{run_check, CheckReport, Params};
use crate::bases::{b_lambda, hl_p, inhom_f, macdonald_dual_func, macdonald_func, FRoute};
use crate::operators::finite::cross_numerator;
use crate::operators::USeries;
use crate::partitions::{partitions_up_to, Partition};
use crate::polyengine::{determinant, divide_antisymmetric, geom_series_factor, vandermonde, Group, MPoly, VarSpec};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::SymFuncP;

/// Which form of the refined Cauchy identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CauchyVariant {
    Proposition,
    CorollaryHomogeneous,
    InhomogeneousU0,
}

impl CauchyVariant {
    pub const ALL: [CauchyVariant; 3] = [
        CauchyVariant::Proposition,
        CauchyVariant::CorollaryHomogeneous,
        CauchyVariant::InhomogeneousU0,
    ];
}

/// Copy a polynomial in `x` into group `g` of `target`.
pub(crate) fn regroup(f: &MPoly, g: Group, target: &Arc<VarSpec>) -> MPoly {
    let k = target.index_of(g).expect("group in target");
    let offset: usize = target.groups[..k].iter().map(|vg| vg.arity).sum();
    let mut out = MPoly::zero(target);
    for (e, c) in f.to_vec() {
        let mut flat = vec![0u16; target.num_vars()];
        flat[offset..offset + e.len()].copy_from_slice(&e);
        out.add_assign_ref(&MPoly::monomial(target, &flat, c));
    }
    out
}

/// `Σ_{J ⊆ [K]} t^{C(K-|J|,2)} Π_{i∈J} (1 - z_i) Π_{j∉J} (z_j - q) Π_{i∈J, j∉J} (t z_i - z_j)/(z_i - z_j) = (q; t)_K`.
pub fn check_lemma_technical(k: usize) -> CheckReport {
    run_check("lemma_technical", Params::new().with("K", k), || {
        let spec = Arc::new(VarSpec::x(k));
        let z = |i: usize| MPoly::var(&spec, Group::X, i);
        let one = MPoly::one(&spec);
        let q = MPoly::constant(&spec, RatQT::q());
        let mut acc = MPoly::zero(&spec);
        for mask in 0u32..(1 << k) {
            let outside = k - mask.count_ones() as usize;
            let mut term =
                cross_numerator(&spec, mask).scale(&RatQT::t_pow((outside * outside.saturating_sub(1) / 2) as i64));
            for i in 0..k {
                let f = if mask & (1 << i) != 0 {
                    one.sub(&z(i))
                } else {
                    z(i).sub(&q)
                };
                term = term.mul(&f);
            }
            acc.add_assign_ref(&term);
        }
        let lhs = acc.exact_divide(&vandermonde(&spec))?;
        let mut rhs = RatQT::one();
        for s in 1..=k {
            rhs = rhs * one_minus_monomial(1, (k - s) as i64);
        }
        Ok::<_, crate::polyengine::PolyError>(witness::polys(&lhs, &MPoly::constant(&spec, rhs)))
    })
}

fn xy_spec(n: usize, m: usize, cap: Option<u16>) -> Arc<VarSpec> {
    Arc::new(VarSpec::x(n).with(Group::Y, m, cap))
}

/// `(u; t^{-1})_k` as denominator factors.
fn inv_pochhammer(k: usize) -> Vec<i64> {
    (0..k as i64).map(|i| -i).collect()
}

/// The `u`-coefficients of `det[A + u B]`.
fn det_in_u(spec: &Arc<VarSpec>, a: &[Vec<MPoly>], b: &[Vec<MPoly>]) -> Vec<MPoly> {
    let n = a.len();
    let mut out = vec![MPoly::zero(spec); n + 1];
    for mask in 0u32..(1 << n) {
        let m: Vec<Vec<MPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if mask & (1 << j) != 0 {
                            b[i][j].clone()
                        } else {
                            a[i][j].clone()
                        }
                    })
                    .collect()
            })
            .collect();
        out[mask.count_ones() as usize].add_assign_ref(&determinant(spec, &m));
    }
    out
}

/// Refined Cauchy identity and its two corollaries, with `y` truncated to `m`
/// variables and degree `d`.
pub fn check_refined_cauchy(n: usize, m: usize, d: usize, variant: CauchyVariant) -> CheckReport {
    let params = Params::new()
        .with("N", n)
        .with("M", m)
        .with("D", d)
        .with("variant", variant);
    run_check("refined_cauchy", params, || refined_cauchy(n, m, d, variant))
}

fn refined_cauchy(
    n: usize,
    m: usize,
    d: usize,
    variant: CauchyVariant,
) -> Result<Option<Witness>, crate::bases::BasisError> {
    let spec = xy_spec(n, m, Some(d as u16));
    let x = |j: usize| MPoly::var(&spec, Group::X, j);
    let shift = MPoly::constant(&spec, RatQT::t_pow(1 - n as i64));
    let geom: Vec<MPoly> = (0..n)
        .map(|j| geom_series_factor(&spec, j, false))
        .collect::<Result<_, _>>()?;

    // Left side grouped by ℓ(λ).
    let mut by_len = vec![MPoly::zero(&spec); n + 1];
    for lam in partitions_up_to(d, n) {
        let xpart = match variant {
            CauchyVariant::CorollaryHomogeneous => hl_p(&lam, n),
            _ => inhom_f(&lam, n, FRoute::Definition)?,
        };
        let ypart = hl_p(&lam, m).scale(&b_lambda(&lam));
        let term = xpart.embed(&spec)?.mul(&regroup(&ypart, Group::Y, &spec));
        by_len[lam.len()].add_assign_ref(&term);
    }

    // Matrix entries, 1-based row i, split as A + u B.
    let mut a = vec![vec![MPoly::zero(&spec); n]; n];
    let mut b = vec![vec![MPoly::zero(&spec); n]; n];
    for i in 1..=n {
        let ti = RatQT::t_pow(1 - i as i64);
        for j in 0..n {
            let base = x(j).pow((n - i) as u32);
            match variant {
                CauchyVariant::CorollaryHomogeneous => {
                    a[i - 1][j] = base.mul(&geom[j]);
                    b[i - 1][j] = base.scale(&ti.neg());
                }
                _ => {
                    // Column j carries an extra factor x_j.
                    let inner = x(j).sub(&shift).mul(&geom[j]).add(&MPoly::constant(&spec, ti.clone()));
                    a[i - 1][j] = base.mul(&inner);
                    b[i - 1][j] = base.mul(&x(j)).scale(&ti.neg());
                }
            }
        }
    }
    let extra = if variant == CauchyVariant::CorollaryHomogeneous {
        0
    } else {
        1
    };
    let num = det_in_u(&spec, &a, &b)
        .iter()
        .map(|p| divide_antisymmetric(p, extra))
        .collect::<Result<Vec<_>, _>>()?;

    if variant == CauchyVariant::InhomogeneousU0 {
        let lhs = by_len.iter().fold(MPoly::zero(&spec), |acc, p| acc.add(p));
        return Ok(witness::polys(&lhs, &num[0]));
    }
    let mut lhs = USeries::constant(by_len[0].clone());
    for (k, p) in by_len.iter().enumerate().skip(1) {
        lhs = lhs.plus(&USeries::new(vec![p.clone()], inv_pochhammer(k)));
    }
    let rhs = USeries::new(num, inv_pochhammer(n));
    Ok(witness::poly_series(&lhs, &rhs))
}

/// Two determinant forms of the refined Cauchy identity in `N + N` variables,
/// compared after clearing denominators:
/// `det[x_j^{N-i} {Π_l (1 - q x_j y_l) - q^{1-i} u Π_l (1 - x_j y_l)}] V(y)`
/// against `det[R_ij Π_{j'≠j} (1 - q x_i y_{j'})(1 - x_i y_{j'})]`.
pub fn check_wzj_equality(n: usize) -> CheckReport {
    run_check("wzj_equality", Params::new().with("N", n), || {
        let spec = Arc::new(VarSpec::x(n).with(Group::Y, n, None).with(Group::U, 1, None));
        let x = |i: usize| MPoly::var(&spec, Group::X, i);
        let y = |i: usize| MPoly::var(&spec, Group::Y, i);
        let u = MPoly::var(&spec, Group::U, 0);
        let one = MPoly::one(&spec);
        let q = RatQT::q();
        let xy = |i: usize, j: usize| x(i).mul(&y(j));
        let lin = |i: usize, j: usize, c: &RatQT| one.sub(&xy(i, j).scale(c));

        let left: Vec<Vec<MPoly>> = (1..=n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut pq = one.clone();
                        let mut p1 = one.clone();
                        for l in 0..n {
                            pq = pq.mul(&lin(j, l, &q));
                            p1 = p1.mul(&lin(j, l, &RatQT::one()));
                        }
                        let inner = pq.sub(&u.mul(&p1).scale(&RatQT::q_pow(1 - i as i64)));
                        x(j).pow((n - i) as u32).mul(&inner)
                    })
                    .collect()
            })
            .collect();
        let mut vy = one.clone();
        for a in 0..n {
            for b in a + 1..n {
                vy = vy.mul(&y(a).sub(&y(b)));
            }
        }
        let lhs = determinant(&spec, &left).mul(&vy);

        let uq = u.scale(&RatQT::q_pow(1 - n as i64));
        let right: Vec<Vec<MPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut e = one
                            .sub(&uq)
                            .add(&uq.sub(&MPoly::constant(&spec, q.clone())).mul(&xy(i, j)));
                        for jp in (0..n).filter(|&jp| jp != j) {
                            e = e.mul(&lin(i, jp, &q)).mul(&lin(i, jp, &RatQT::one()));
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        let rhs = determinant(&spec, &right);
        Ok::<_, std::convert::Infallible>(witness::polys(&lhs, &rhs))
    })
}

/// `Σ_{|λ|≤D} P_λ(x; t) Q_λ(y; t) = Π_{i,j} (1 - t x_i y_j)/(1 - x_i y_j)`, truncated at degree `D` in `y`.
pub fn check_cauchy_hl(mx: usize, my: usize, d: usize) -> CheckReport {
    let params = Params::new().with("M_x", mx).with("M_y", my).with("D", d);
    run_check("cauchy_hl", params, || {
        let spec = xy_spec(mx, my, Some(d as u16));
        let mut lhs = MPoly::zero(&spec);
        for lam in partitions_up_to(d, mx.min(my)) {
            let yq = hl_p(&lam, my).scale(&b_lambda(&lam));
            lhs.add_assign_ref(&hl_p(&lam, mx).embed(&spec)?.mul(&regroup(&yq, Group::Y, &spec)));
        }
        let mut rhs = MPoly::one(&spec);
        for j in 0..mx {
            rhs = rhs.mul(&geom_series_factor(&spec, j, false)?);
        }
        Ok::<_, crate::polyengine::PolyError>(witness::polys(&lhs, &rhs))
    })
}

type Kernel = BTreeMap<(Partition, Partition), RatQT>;

fn kernel_add(k: &mut Kernel, key: (Partition, Partition), v: RatQT) {
    if v.is_zero() {
        return;
    }
    let e = k.entry(key).or_default();
    *e = &*e + &v;
}

/// `f^*` in the `x` slot of `Π = Σ_λ M_λ(x) M_λ(y)/⟨M_λ, M_λ⟩` equals multiplication by `f(y)`,
/// both truncated at degree `D` in `y`.
pub fn check_adjoint_kernel(d: usize, f: &SymFuncP) -> CheckReport {
    let params = Params::new().with("D", d).with("f", f.to_string());
    run_check("adjoint_kernel", params, || {
        let mut kernel: Kernel = BTreeMap::new();
        for lam in partitions_up_to(d, d) {
            let mx = macdonald_func(&lam);
            let my = macdonald_dual_func(&lam);
            for (a, ca) in mx.terms() {
                for (b, cb) in my.terms() {
                    kernel_add(&mut kernel, (a.clone(), b.clone()), ca * cb);
                }
            }
        }
        let mut lhs: Kernel = BTreeMap::new();
        let mut rhs: Kernel = BTreeMap::new();
        for ((a, b), c) in &kernel {
            let lowered = SymFuncP::p(a.clone()).apply_adjoint_of(f);
            for (a2, c2) in lowered.terms() {
                kernel_add(&mut lhs, (a2.clone(), b.clone()), c * c2);
            }
            let raised = SymFuncP::p(b.clone()).mul(f);
            for (b2, c2) in raised.terms() {
                if b2.size() <= d {
                    kernel_add(&mut rhs, (a.clone(), b2.clone()), c * c2);
                }
            }
        }
        let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).cloned().collect();
        let zero = RatQT::zero();
        for key in keys {
            let l = lhs.get(&key).unwrap_or(&zero);
            let r = rhs.get(&key).unwrap_or(&zero);
            if l != r {
                return Ok::<_, std::convert::Infallible>(Some(Witness::new(
                    format!("p{}(x) p{}(y)", key.0, key.1),
                    l,
                    r,
                )));
            }
        }
        Ok(None)
    })
}
