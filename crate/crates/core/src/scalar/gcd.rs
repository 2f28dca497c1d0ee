//! Polynomial gcd in `Z[q, t]`.
//!
//! Polynomials are viewed as elements of `Z[t][q]`. Monomial and `Z[t]` content
//! are split off first; the primitive parts are then tested for coprimality by
//! reduction modulo a prime at a specialization of `t`, which settles the vast
//! majority of calls cheaply. Only when that test is inconclusive do we run a
//! primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::poly::PolyQT;
use super::upoly::{self, UPoly};

const P: u64 = (1 << 61) - 1;
const EVAL_POINTS: [u64; 3] = [1_000_003, 7_777_777_777, 123_456_789_012_345];

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let mut r = c % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().unwrap()
}

fn eval_upoly(p: &[BigInt], x: u64) -> u64 {
    let mut acc = 0u64;
    for c in p.iter().rev() {
        acc = addmod(mulmod(acc, x), reduce(c));
    }
    acc
}

/// Degree of the gcd of two univariate polynomials over `F_p`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = invmod(*b.last().unwrap());
        let db = b.len() - 1;
        while a.len() > db {
            let da = a.len() - 1;
            let f = mulmod(a[da], inv);
            let s = da - db;
            for (j, &bc) in b.iter().enumerate() {
                a[s + j] = submod(a[s + j], mulmod(f, bc));
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True if the two primitive (in `q`) polynomials are certainly coprime.
fn coprime_certificate(a: &[UPoly], b: &[UPoly]) -> bool {
    let lc = a.last().unwrap();
    for &r in EVAL_POINTS.iter() {
        if eval_upoly(lc, r) == 0 {
            continue;
        }
        let ea: Vec<u64> = a.iter().map(|row| eval_upoly(row, r)).collect();
        let eb: Vec<u64> = b.iter().map(|row| eval_upoly(row, r)).collect();
        return gcd_degree_mod(ea, eb) == 0;
    }
    false
}

fn rows_content(rows: &[UPoly]) -> UPoly {
    let mut g: UPoly = Vec::new();
    for r in rows {
        if r.is_empty() {
            continue;
        }
        g = if g.is_empty() {
            upoly::primitive_sign(r)
        } else {
            upoly::gcd(&g, r)
        };
        if g.len() == 1 && g[0] == BigInt::from(1) {
            break;
        }
    }
    g
}

fn rows_div_content(rows: &[UPoly], c: &UPoly) -> Vec<UPoly> {
    if upoly::is_one(c) {
        return rows.to_vec();
    }
    rows.iter()
        .map(|r| {
            if r.is_empty() {
                Vec::new()
            } else {
                upoly::div_exact(r, c).expect("content divides every coefficient")
            }
        })
        .collect()
}

fn rows_primitive(rows: &[UPoly]) -> Vec<UPoly> {
    let c = rows_content(rows);
    let mut out = rows_div_content(rows, &c);
    if out.last().and_then(|r| r.last()).is_some_and(|c| c.is_negative()) {
        out = out.iter().map(|r| upoly::neg(r)).collect();
    }
    out
}

/// Pseudo-remainder in `Z[t][q]`.
fn rows_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let s = dr - db;
        for row in r.iter_mut() {
            if !row.is_empty() {
                *row = upoly::mul(row, lb);
            }
        }
        for (j, bc) in b.iter().enumerate() {
            if !bc.is_empty() {
                r[s + j] = upoly::sub(&r[s + j], &upoly::mul(&lr, bc));
            }
        }
        while r.last().is_some_and(|x| x.is_empty()) {
            r.pop();
        }
    }
    r
}

fn primitive_gcd(a: Vec<UPoly>, b: Vec<UPoly>) -> Vec<UPoly> {
    let (mut x, mut y) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if y.len() == 1 || coprime_certificate(&x, &y) {
        return vec![vec![BigInt::from(1)]];
    }
    loop {
        let r = rows_prem(&x, &y);
        if r.is_empty() {
            return rows_primitive(&y);
        }
        if r.len() == 1 {
            return vec![vec![BigInt::from(1)]];
        }
        x = y;
        y = rows_primitive(&r);
    }
}

/// Greatest common divisor in `Z[q, t]`, up to sign.
pub fn gcd(a: &PolyQT, b: &PolyQT) -> PolyQT {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (qa, ta) = a.monomial_content();
    let (qb, tb) = b.monomial_content();
    let (qm, tm) = (qa.min(qb), ta.min(tb));
    let a = a.unshift(qa, ta);
    let b = b.unshift(qb, tb);
    let ca = rows_content(&a.rows);
    let cb = rows_content(&b.rows);
    let c = upoly::gcd(&ca, &cb);
    let g = if a.rows.len() == 1 || b.rows.len() == 1 {
        PolyQT::one()
    } else {
        let pa = rows_div_content(&a.rows, &ca);
        let pb = rows_div_content(&b.rows, &cb);
        PolyQT::from_rows(primitive_gcd(pa, pb))
    };
    g.mul(&PolyQT::from_t_poly(c)).shift(qm, tm)
}

/// Exact quotient in `Z[q, t]`, panicking if the division is not exact.
pub(crate) fn div_known_exact(a: &PolyQT, d: &PolyQT) -> PolyQT {
    a.div_exact(d)
        .unwrap_or_else(|| panic!("inexact polynomial division: ({a}) / ({d})"))
}
