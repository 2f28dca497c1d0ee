//! The rational function field `Q(q, t)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::{div_known_exact, gcd};
use super::poly::PolyQT;
use super::ScalarError;

/// An element of `Q(q, t)` in canonical form.
///
/// Numerator and denominator are coprime integer polynomials and the
/// denominator has a positive leading coefficient in graded lexicographic
/// order, so two values are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: PolyQT,
    den: PolyQT,
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT {
            num: PolyQT::zero(),
            den: PolyQT::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQT::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(PolyQT::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new_unchecked_reduced(PolyQT::constant(r.numer().clone()), PolyQT::constant(r.denom().clone()))
    }

    pub fn from_poly(p: PolyQT) -> Self {
        RatQT {
            num: p,
            den: PolyQT::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(PolyQT::q())
    }

    pub fn t() -> Self {
        Self::from_poly(PolyQT::t())
    }

    /// `q^a t^b` for integer (possibly negative) exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let num = PolyQT::monomial(1, a.max(0) as usize, b.max(0) as usize);
        let den = PolyQT::monomial(1, (-a).max(0) as usize, (-b).max(0) as usize);
        RatQT { num, den }
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(0, e)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 0)
    }

    /// `num / den`, reduced to canonical form.
    pub fn new(num: PolyQT, den: PolyQT) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: PolyQT, den: PolyQT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Self::new_unchecked_reduced(num, den);
        }
        Self::new_unchecked_reduced(div_known_exact(&num, &g), div_known_exact(&den, &g))
    }

    /// Fix the sign of an already coprime pair.
    fn new_unchecked_reduced(num: PolyQT, den: PolyQT) -> Self {
        if den.leading_coeff_sign_negative() {
            RatQT {
                num: num.neg(),
                den: den.neg(),
            }
        } else {
            RatQT { num, den }
        }
    }

    pub fn numer(&self) -> &PolyQT {
        &self.num
    }

    pub fn denom(&self) -> &PolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when the value lies in `Z[t]`.
    pub fn is_integer_t_polynomial(&self) -> bool {
        self.den.is_one() && self.num.q_degree().unwrap_or(0) == 0
    }

    /// The value as a rational number, if it is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRational::new(self.num.coeff(0, 0), self.den.coeff(0, 0)))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RatQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::new_unchecked_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b == d {
            return Self::reduce(a.add(c), b.clone());
        }
        if b.is_one() {
            return Self::new_unchecked_reduced(a.mul(d).add(c), d.clone());
        }
        if d.is_one() {
            return Self::new_unchecked_reduced(a.add(&c.mul(b)), b.clone());
        }
        let g = gcd(b, d);
        if g.is_one() || g.neg().is_one() {
            let n = a.mul(d).add(&c.mul(b));
            if n.is_zero() {
                return Self::zero();
            }
            return Self::new_unchecked_reduced(n, b.mul(d));
        }
        let b1 = div_known_exact(b, &g);
        let d1 = div_known_exact(d, &g);
        let n = a.mul(&d1).add(&c.mul(&b1));
        if n.is_zero() {
            return Self::zero();
        }
        let g2 = gcd(&n, &g);
        if g2.is_one() {
            Self::new_unchecked_reduced(n, b1.mul(d))
        } else {
            Self::new_unchecked_reduced(div_known_exact(&n, &g2), b1.mul(&div_known_exact(d, &g2)))
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        let (a, d) = cancel(a, d);
        let (c, b) = cancel(c, b);
        Self::new_unchecked_reduced(a.mul(&c), b.mul(&d))
    }

    pub fn div_ref(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RatQT {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.mul_ref(&Self::from_int(c.clone()))
    }

    /// Substitute `q = 0`.
    pub fn eval_q0(&self) -> Result<Self, ScalarError> {
        let d0 = self.den.eval_q0();
        if d0.is_zero() {
            return Err(ScalarError::PoleAtQ0);
        }
        Ok(Self::reduce(self.num.eval_q0(), d0))
    }

    /// Substitute `t ↦ 1/t`.
    pub fn subst_t_inv(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.t_degree().unwrap_or(0);
        let dd = self.den.t_degree().unwrap_or(0);
        let mut num = self.num.reverse_t(dn);
        let mut den = self.den.reverse_t(dd);
        if dd >= dn {
            num = num.shift(0, dd - dn);
        } else {
            den = den.shift(0, dn - dd);
        }
        Self::reduce(num, den)
    }

    /// Substitute `q ↦ 1/q`.
    pub fn subst_q_inv(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.q_degree().unwrap_or(0);
        let dd = self.den.q_degree().unwrap_or(0);
        let mut num = self.num.reverse_q(dn);
        let mut den = self.den.reverse_q(dd);
        if dd >= dn {
            num = num.shift(dd - dn, 0);
        } else {
            den = den.shift(dn - dd, 0);
        }
        Self::reduce(num, den)
    }

    /// Substitute `q = 1`, `t = 1` where both sides are defined.
    pub fn eval_one(&self) -> Option<BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            None
        } else {
            Some(BigRational::new(self.num.eval_one(), d))
        }
    }

    /// Evaluate at rational `q`, `t`; `None` at a pole.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Option<BigRational> {
        let n = eval_poly(&self.num, q, t);
        let d = eval_poly(&self.den, q, t);
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }

    /// Serialized form: integer-primitive denominator and rational numerator
    /// coefficients, each as `(qe, te, coeff)` sorted by `(qe, te)`.
    pub fn to_terms(&self) -> (Vec<(usize, usize, BigRational)>, DenTerms) {
        let c = self.den.integer_content();
        let den = self.den.div_integer(&c);
        let num = self
            .num
            .terms()
            .map(|(a, b, x)| (a, b, BigRational::new(x.clone(), c.clone())))
            .collect();
        let den = den.terms().map(|(a, b, x)| (a, b, x.clone())).collect();
        (num, den)
    }

    pub fn from_terms(
        num: &[(usize, usize, BigRational)],
        den: &[(usize, usize, BigRational)],
    ) -> Result<Self, ScalarError> {
        let l = num
            .iter()
            .chain(den)
            .fold(BigInt::one(), |acc, (_, _, c)| acc.lcm(c.denom()));
        let clear = |ts: &[(usize, usize, BigRational)]| {
            PolyQT::from_terms(ts.iter().map(|(a, b, c)| (*a, *b, (c * &l).to_integer())))
        };
        Self::new(clear(num), clear(den))
    }
}

fn eval_poly(p: &PolyQT, q: &BigRational, t: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for (a, b, c) in p.terms() {
        acc += BigRational::from(c.clone()) * num_traits::pow(q.clone(), a) * num_traits::pow(t.clone(), b);
    }
    acc
}

/// Remove the common factor of `a` and `b`.
fn cancel(a: &PolyQT, b: &PolyQT) -> (PolyQT, PolyQT) {
    if b.is_one() || a.is_one() {
        return (a.clone(), b.clone());
    }
    let g = gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (div_known_exact(a, &g), div_known_exact(b, &g))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&RatQT> for &RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &RatQT) -> RatQT {
                self.$f(rhs)
            }
        }
        impl $tr<RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: RatQT) -> RatQT {
                self.$f(&rhs)
            }
        }
        impl $tr<&RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &RatQT) -> RatQT {
                self.$f(rhs)
            }
        }
        impl $tr<RatQT> for &RatQT {
            type Output = RatQT;
            fn $m(self, rhs: RatQT) -> RatQT {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&RatQT> for &RatQT {
    type Output = RatQT;
    /// Panics on division by zero; use [`RatQT::div_ref`] to handle it.
    fn div(self, rhs: &RatQT) -> RatQT {
        self.div_ref(rhs).expect("division by zero in Q(q,t)")
    }
}

impl Div<RatQT> for RatQT {
    type Output = RatQT;
    fn div(self, rhs: RatQT) -> RatQT {
        &self / &rhs
    }
}

impl Div<&RatQT> for RatQT {
    type Output = RatQT;
    fn div(self, rhs: &RatQT) -> RatQT {
        &self / rhs
    }
}

impl Div<RatQT> for &RatQT {
    type Output = RatQT;
    fn div(self, rhs: RatQT) -> RatQT {
        self / &rhs
    }
}

impl Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT::neg(&self)
    }
}

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        RatQT::neg(self)
    }
}

impl AddAssign<&RatQT> for RatQT {
    fn add_assign(&mut self, rhs: &RatQT) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&RatQT> for RatQT {
    fn sub_assign(&mut self, rhs: &RatQT) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&RatQT> for RatQT {
    fn mul_assign(&mut self, rhs: &RatQT) {
        *self = self.mul_ref(rhs);
    }
}

impl From<i64> for RatQT {
    fn from(c: i64) -> Self {
        RatQT::from_int(c)
    }
}

impl From<PolyQT> for RatQT {
    fn from(p: PolyQT) -> Self {
        RatQT::from_poly(p)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT[{self}]")
    }
}

/// Denominator terms `(qe, te, coeff)`.
pub type DenTerms = Vec<(usize, usize, BigInt)>;

#[derive(Serialize, Deserialize)]
struct RatQTJson {
    num: Vec<(usize, usize, String)>,
    den: Vec<(usize, usize, String)>,
}

fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from(s.trim().parse::<BigInt>().ok()?)),
    }
}

impl Serialize for RatQT {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (num, den) = self.to_terms();
        RatQTJson {
            num: num.iter().map(|(a, b, c)| (*a, *b, fmt_rational(c))).collect(),
            den: den
                .iter()
                .map(|(a, b, c)| (*a, *b, fmt_rational(&BigRational::from(c.clone()))))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RatQTJson::deserialize(d)?;
        let conv = |ts: &[(usize, usize, String)]| -> Result<Vec<_>, D::Error> {
            ts.iter()
                .map(|(a, b, c)| {
                    parse_rational(c)
                        .map(|r| (*a, *b, r))
                        .ok_or_else(|| D::Error::custom(format!("bad coefficient {c:?}")))
                })
                .collect()
        };
        let num = conv(&raw.num)?;
        let den = conv(&raw.den)?;
        RatQT::from_terms(&num, &den).map_err(D::Error::custom)
    }
}

/// `(1 - q^a t^b)` for integer exponents, as a field element.
pub fn one_minus_monomial(a: i64, b: i64) -> RatQT {
    RatQT::one() - RatQT::monomial(a, b)
}

/// `sign` as a field element.
pub fn sign(neg: bool) -> RatQT {
    if neg {
        RatQT::from_int(-1)
    } else {
        RatQT::one()
    }
}
