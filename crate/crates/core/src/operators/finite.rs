use std::sync::{Arc, LazyLock};

use super::useries::USeries;
use super::OperatorError;
use crate::cache::Memo;
use crate::polyengine::{determinant, divide_antisymmetric, vandermonde, Group, MPoly, VarSpec};
use crate::scalar::{sign, RatQT};

fn check_arity(f: &MPoly, n: usize) -> Result<Arc<VarSpec>, OperatorError> {
    let spec = f.spec().clone();
    if spec.arity(Group::X) != n || spec.groups.len() != 1 {
        return Err(OperatorError::Arity {
            expected: n,
            found: spec.arity(Group::X),
        });
    }
    Ok(spec)
}

fn shift_subset(f: &MPoly, mask: u32) -> MPoly {
    let n = f.spec().arity(Group::X);
    (0..n)
        .filter(|j| mask & (1 << j) != 0)
        .fold(f.clone(), |g, j| g.q_shift(Group::X, j))
}

/// `V(x) Π_{i∈I, j∉I} (t x_i - x_j)/(x_i - x_j)` for the subset `I` given as a bit mask.
pub(crate) fn cross_numerator(spec: &Arc<VarSpec>, mask: u32) -> MPoly {
    let n = spec.arity(Group::X);
    let t = RatQT::t();
    let x = |i: usize| MPoly::var(spec, Group::X, i);
    let inside = |i: usize| mask & (1 << i) != 0;
    // Same-side pairs keep their Vandermonde factor; a cross pair with the
    // outside index first flips sign.
    let mut out = MPoly::one(spec);
    let mut flips = 0;
    for a in 0..n {
        for b in a + 1..n {
            let f = match (inside(a), inside(b)) {
                (true, false) => x(a).scale(&t).sub(&x(b)),
                (false, true) => {
                    flips += 1;
                    x(b).scale(&t).sub(&x(a))
                }
                _ => x(a).sub(&x(b)),
            };
            out = out.mul(&f);
        }
    }
    if flips % 2 == 1 {
        out.neg()
    } else {
        out
    }
}

/// `H_N^r f = t^{C(r,2)} Σ_{|I|=r} Π_{i∈I, j∉I} (t x_i - x_j)/(x_i - x_j) Π_{i∈I} T_{q,x_i} f`.
pub fn apply_hn(r: usize, f: &MPoly, n: usize) -> Result<MPoly, OperatorError> {
    let spec = check_arity(f, n)?;
    if r > n {
        return Err(OperatorError::Range(format!("r = {r} exceeds N = {n}")));
    }
    if r == 0 {
        return Ok(f.clone());
    }
    let mut acc = MPoly::zero(&spec);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == r {
            acc.add_assign_ref(&cross_numerator(&spec, mask).mul(&shift_subset(f, mask)));
        }
    }
    let out = acc.exact_divide(&vandermonde(&spec))?;
    Ok(out.scale(&RatQT::t_pow((r * (r - 1) / 2) as i64)))
}

/// Column choice in the expansion of the determinant defining `D_N(z)`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Shift,
    Z,
    X,
}

type DetKey = (usize, Vec<u8>);
static DETS: LazyLock<Memo<DetKey, MPoly>> = LazyLock::new(Memo::new);

/// Determinant with column `j` of the given kind, each column multiplied by `x_j`.
fn column_det(spec: &Arc<VarSpec>, parts: &[Part]) -> MPoly {
    let n = parts.len();
    let key = (n, parts.iter().map(|p| *p as u8).collect());
    DETS.get_or_insert_with(&key, || {
        let shift = RatQT::t_pow(1 - n as i64);
        let m: Vec<Vec<MPoly>> = (1..=n)
            .map(|i| {
                parts
                    .iter()
                    .enumerate()
                    .map(|(j, part)| {
                        let x = MPoly::var(spec, Group::X, j);
                        let base = x.pow((n - i) as u32);
                        match part {
                            Part::Shift => base
                                .mul(&x.scale(&shift).sub(&MPoly::one(spec)))
                                .scale(&RatQT::t_pow((n - i) as i64)),
                            Part::Z => base,
                            Part::X => base.mul(&x),
                        }
                    })
                    .collect()
            })
            .collect();
        determinant(spec, &m)
    })
}

/// `D_N^k f` for `k = 0..N`, from the determinant with column `j` equal to
/// `x_j^{N-i-1} {(x_j t^{1-N} - 1) t^{N-i} z T_{q,x_j} + x_j + z}`.
pub fn dn_components(f: &MPoly, n: usize) -> Result<Vec<MPoly>, OperatorError> {
    let spec = check_arity(f, n)?;
    let mut comps = vec![MPoly::zero(&spec); n + 1];
    let total = 3usize.pow(n as u32);
    let mut shifted: Vec<Option<MPoly>> = vec![None; 1 << n];
    for code in 0..total {
        let mut c = code;
        let mut parts = Vec::with_capacity(n);
        let mut mask = 0u32;
        for j in 0..n {
            let p = match c % 3 {
                0 => Part::Shift,
                1 => Part::Z,
                _ => Part::X,
            };
            if p == Part::Shift {
                mask |= 1 << j;
            }
            parts.push(p);
            c /= 3;
        }
        let det = column_det(&spec, &parts);
        if det.is_zero() {
            continue;
        }
        let k = parts.iter().filter(|p| **p != Part::X).count();
        let g = shifted[mask as usize].get_or_insert_with(|| shift_subset(f, mask));
        comps[k].add_assign_ref(&det.mul(g));
    }
    comps.iter().map(|p| Ok(divide_antisymmetric(p, 1)?)).collect()
}

/// `D_N(z) f` as a polynomial in `z`.
pub fn apply_dn(f: &MPoly, n: usize) -> Result<USeries<MPoly>, OperatorError> {
    Ok(USeries::new(dn_components(f, n)?, Vec::new()))
}

/// `A_N(u) f = D_N(-1/u) f (-u)^N t^{N(N-1)/2} / (u; t)_N`.
pub fn apply_an(f: &MPoly, n: usize) -> Result<USeries<MPoly>, OperatorError> {
    let d = dn_components(f, n)?;
    let norm = RatQT::t_pow((n * n.saturating_sub(1) / 2) as i64);
    // (-u)^N (-1/u)^k = (-1)^{N-k} u^{N-k}.
    let num: Vec<MPoly> = (0..=n).map(|m| d[n - m].scale(&(sign(m % 2 == 1) * &norm))).collect();
    Ok(USeries::new(num, (0..n as i64).collect()))
}

pub(crate) fn clear_memos() {
    DETS.clear();
}
