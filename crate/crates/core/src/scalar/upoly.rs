//! Dense univariate polynomials over the integers.
//!
//! A polynomial is a `Vec<BigInt>` indexed by exponent, with no trailing zeros.
//! The empty vector is the zero polynomial. These helpers are the coefficient
//! ring for [`PolyQT`](super::PolyQT), which views a bivariate polynomial as a
//! polynomial in `q` whose coefficients are polynomials in `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub(crate) fn is_one(p: &[BigInt]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn add_assign(a: &mut UPoly, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (o, s) in a.iter_mut().zip(b) {
        *o += s;
    }
    trim(a);
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, s) in out.iter_mut().zip(b) {
        *o -= s;
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigInt]) -> UPoly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Divide every coefficient by `c`, which must divide all of them.
pub(crate) fn div_scalar(a: &[BigInt], c: &BigInt) -> UPoly {
    if c.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    div_scalar(a, &c)
}

/// Pseudo-remainder of `a` by `b` (b nonzero).
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a` over the integers.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut quo = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &qc * bc;
        }
        quo[shift] = qc;
        trim(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    trim(&mut quo);
    Some(quo)
}

/// Greatest common divisor over `Z[t]`, normalized to a positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return primitive_sign(b);
    }
    if b.is_empty() {
        return primitive_sign(a);
    }
    let ca = content(a);
    let cb = content(b);
    let c = ca.gcd(&cb);
    let low = lowest_nonzero(a).min(lowest_nonzero(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    // Shortcut for the very common case of a shared power of t only.
    if x.len() - lowest_nonzero(&x) == 1 || y.len() - lowest_nonzero(&y) == 1 {
        let mut g = vec![BigInt::zero(); low + 1];
        g[low] = c;
        return g;
    }
    loop {
        let r = prem(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![c];
        }
        x = y;
        y = primitive(&r);
    }
    scale(&y, &c)
}

pub(crate) fn primitive_sign(a: &[BigInt]) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        neg(a)
    } else {
        a.to_vec()
    }
}

pub(crate) fn lowest_nonzero(a: &[BigInt]) -> usize {
    a.iter().position(|c| !c.is_zero()).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        let mut v: UPoly = cs.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1-t)(1+t) and (1-t)(1+t+t^2)
        let a = p(&[1, 0, -1]);
        let b = p(&[1, 0, 0, -1]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn exact_division_and_failure() {
        let a = p(&[1, 0, -1]);
        assert_eq!(div_exact(&a, &p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(div_exact(&a, &p(&[1, 2])), None);
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(gcd(&p(&[2, 2]), &p(&[4, 4])), p(&[2, 2]));
        assert_eq!(gcd(&p(&[0, 0, 3]), &p(&[0, 6])), p(&[0, 3]));
    }
}
