//! Integer polynomials in `q` and `t`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};

/// A polynomial in `q` and `t` with integer coefficients.
///
/// Stored densely as `rows[i][j]` = coefficient of `q^i t^j`. Rows and the row
/// list carry no trailing zeros, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQT {
    pub(crate) rows: Vec<UPoly>,
}

impl PolyQT {
    pub fn zero() -> Self {
        PolyQT { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · q^qe · t^te`.
    pub fn monomial(c: impl Into<BigInt>, qe: usize, te: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut row = vec![BigInt::zero(); te + 1];
        row[te] = c;
        let mut rows = vec![Vec::new(); qe + 1];
        rows[qe] = row;
        PolyQT { rows }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Build from `(qe, te, coeff)` triples; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, C)>,
        C: Into<BigInt>,
    {
        let mut rows: Vec<UPoly> = Vec::new();
        for (qe, te, c) in terms {
            if rows.len() <= qe {
                rows.resize(qe + 1, Vec::new());
            }
            let row = &mut rows[qe];
            if row.len() <= te {
                row.resize(te + 1, BigInt::zero());
            }
            row[te] += c.into();
        }
        Self::from_rows(rows)
    }

    pub(crate) fn from_rows(mut rows: Vec<UPoly>) -> Self {
        for r in rows.iter_mut() {
            upoly::trim(r);
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        PolyQT { rows }
    }

    /// A polynomial in `t` alone.
    pub(crate) fn from_t_poly(p: UPoly) -> Self {
        Self::from_rows(vec![p])
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && upoly::is_one(&self.rows[0])
    }

    /// True when the polynomial is a nonzero integer.
    pub fn is_constant(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].len() == 1
    }

    pub fn q_degree(&self) -> Option<usize> {
        upoly_degree(&self.rows)
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| upoly::degree(r)).max()
    }

    /// Terms as `(qe, te, coeff)`, sorted ascending by `(qe, te)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    pub fn coeff(&self, qe: usize, te: usize) -> BigInt {
        self.rows.get(qe).and_then(|r| r.get(te)).cloned().unwrap_or_default()
    }

    /// Leading term under graded lexicographic order (total degree, then `q`-degree).
    pub fn leading_term(&self) -> Option<(usize, usize, &BigInt)> {
        self.terms().max_by(|a, b| grlex(a.0, a.1, b.0, b.1))
    }

    pub fn leading_coeff_sign_negative(&self) -> bool {
        self.leading_term().is_some_and(|(_, _, c)| c.is_negative())
    }

    pub fn neg(&self) -> Self {
        PolyQT {
            rows: self.rows.iter().map(|r| upoly::neg(r)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.rows.len() >= other.rows.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut rows = long.rows.clone();
        for (r, s) in rows.iter_mut().zip(&short.rows) {
            upoly::add_assign(r, s);
        }
        Self::from_rows(rows)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut rows = self.rows.clone();
        if rows.len() < other.rows.len() {
            rows.resize(other.rows.len(), Vec::new());
        }
        for (r, s) in rows.iter_mut().zip(&other.rows) {
            *r = upoly::sub(r, s);
        }
        Self::from_rows(rows)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        PolyQT {
            rows: rows_mul(&self.rows, &other.rows),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQT {
            rows: self.rows.iter().map(|r| upoly::scale(r, c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![Vec::new(); a];
        for r in &self.rows {
            if r.is_empty() {
                rows.push(Vec::new());
            } else {
                let mut nr = vec![BigInt::zero(); b];
                nr.extend(r.iter().cloned());
                rows.push(nr);
            }
        }
        PolyQT { rows }
    }

    /// Largest `(a, b)` such that `q^a t^b` divides the polynomial.
    pub fn monomial_content(&self) -> (usize, usize) {
        let a = self.rows.iter().position(|r| !r.is_empty()).unwrap_or(0);
        let b = self
            .rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| upoly::lowest_nonzero(r))
            .min()
            .unwrap_or(0);
        (a, b)
    }

    /// Divide by `q^a t^b`, which must divide the polynomial.
    pub fn unshift(&self, a: usize, b: usize) -> Self {
        let rows = self.rows[a.min(self.rows.len())..]
            .iter()
            .map(|r| if r.is_empty() { Vec::new() } else { r[b..].to_vec() })
            .collect();
        PolyQT { rows }
    }

    /// Gcd of the integer coefficients (zero for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for r in &self.rows {
            for c in r {
                if !c.is_zero() {
                    g = g.gcd(c);
                    if g.is_one() {
                        return g;
                    }
                }
            }
        }
        g
    }

    pub fn div_integer(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        PolyQT {
            rows: self.rows.iter().map(|r| upoly::div_scalar(r, c)).collect(),
        }
    }

    /// Substitute `q = 0`.
    pub fn eval_q0(&self) -> Self {
        match self.rows.first() {
            Some(r) => Self::from_t_poly(r.clone()),
            None => Self::zero(),
        }
    }

    /// Substitute `q = 1` and `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms().map(|(_, _, c)| c.clone()).sum()
    }

    /// `t^d · p(q, 1/t)` where `d` is the `t`-degree; reverses each row.
    pub fn reverse_t(&self, d: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                if r.is_empty() {
                    return Vec::new();
                }
                let mut nr = vec![BigInt::zero(); d + 1];
                for (j, c) in r.iter().enumerate() {
                    nr[d - j] = c.clone();
                }
                nr
            })
            .collect();
        Self::from_rows(rows)
    }

    /// `q^d · p(1/q, t)` where `d` is the `q`-degree.
    pub fn reverse_q(&self, d: usize) -> Self {
        let mut rows = vec![Vec::new(); d + 1];
        for (i, r) in self.rows.iter().enumerate() {
            rows[d - i] = r.clone();
        }
        Self::from_rows(rows)
    }

    /// Substitute integer values for `q` and `t`.
    pub fn eval_int(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for r in self.rows.iter().rev() {
            let mut row_val = BigInt::zero();
            for c in r.iter().rev() {
                row_val = row_val * t + c;
            }
            acc = acc * q + row_val;
        }
        acc
    }

    /// Exact quotient, or `None` when `d` does not divide `self` in `Z[q, t]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let (qa, ta) = self.monomial_content();
        let (qd, td) = d.monomial_content();
        if qd > qa || td > ta {
            return None;
        }
        let a = self.unshift(qd, td);
        let dd = d.unshift(qd, td);
        rows_div_exact(&a.rows, &dd.rows).map(|rows| PolyQT { rows })
    }
}

/// Graded lexicographic comparison of `q^a1 t^b1` with `q^a2 t^b2`.
pub(crate) fn grlex(a1: usize, b1: usize, a2: usize, b2: usize) -> Ordering {
    (a1 + b1, a1).cmp(&(a2 + b2, a2))
}

fn upoly_degree(rows: &[UPoly]) -> Option<usize> {
    if rows.is_empty() {
        None
    } else {
        Some(rows.len() - 1)
    }
}

pub(crate) fn rows_mul(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let mut out: Vec<UPoly> = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_empty() {
                continue;
            }
            let prod = upoly::mul(x, y);
            upoly::add_assign(&mut out[i + j], &prod);
        }
    }
    while out.last().is_some_and(|r| r.is_empty()) {
        out.pop();
    }
    out
}

/// Exact division in `Z[t][q]` by long division in `q`.
pub(crate) fn rows_div_exact(a: &[UPoly], d: &[UPoly]) -> Option<Vec<UPoly>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut r: Vec<UPoly> = a.to_vec();
    let mut quo: Vec<UPoly> = vec![Vec::new(); a.len() - dd];
    while r.len() > dd {
        let dr = r.len() - 1;
        let qc = upoly::div_exact(&r[dr], lc)?;
        let s = dr - dd;
        for (j, dc) in d.iter().enumerate() {
            if !dc.is_empty() {
                let prod = upoly::mul(&qc, dc);
                r[s + j] = upoly::sub(&r[s + j], &prod);
            }
        }
        quo[s] = qc;
        while r.last().is_some_and(|x| x.is_empty()) {
            r.pop();
        }
    }
    if !r.is_empty() {
        return None;
    }
    while quo.last().is_some_and(|x| x.is_empty()) {
        quo.pop();
    }
    Some(quo)
}

impl fmt::Display for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| grlex(b.0, b.1, a.0, a.1));
        for (k, (qe, te, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts = Vec::new();
            if !abs.is_one() || (qe == 0 && te == 0) {
                parts.push(abs.to_string());
            }
            match qe {
                0 => {}
                1 => parts.push("q".into()),
                e => parts.push(format!("q^{e}")),
            }
            match te {
                0 => {}
                1 => parts.push("t".into()),
                e => parts.push(format!("t^{e}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let a = PolyQT::from_terms([(0, 0, 1), (1, 1, -1)]); // 1 - qt
        let b = PolyQT::from_terms([(0, 0, 1), (2, 0, 1)]); // 1 + q^2
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.sub(&p), PolyQT::zero());
        assert_eq!(a.add(&a.neg()), PolyQT::zero());
    }

    #[test]
    fn non_divisor_is_rejected() {
        let a = PolyQT::from_terms([(0, 0, 1), (1, 0, 1)]);
        let b = PolyQT::from_terms([(0, 0, 1), (0, 1, 1)]);
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(PolyQT::constant(3).div_exact(&PolyQT::constant(2)), None);
    }

    #[test]
    fn leading_term_is_grlex() {
        let p = PolyQT::from_terms([(0, 2, 5), (1, 1, -3), (0, 0, 1)]);
        assert_eq!(p.leading_term().map(|(a, b, _)| (a, b)), Some((1, 1)));
        assert_eq!(p.to_string(), "-3*q*t + 5*t^2 + 1");
    }
}
