use serde::{Deserialize, Serialize};

use crate::polyengine::MPoly;
use crate::scalar::RatQT;
use crate::symfunc::SymFuncP;

/// Values an operator series may carry in each power of `u`.
pub trait SeriesCoeff: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, s: &RatQT) -> Self;
    fn vanishes(&self) -> bool;
}

impl SeriesCoeff for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.spec())
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, s: &RatQT) -> Self {
        self.scale(s)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl SeriesCoeff for SymFuncP {
    fn zero_like(&self) -> Self {
        SymFuncP::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, s: &RatQT) -> Self {
        self.scale(s)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl SeriesCoeff for RatQT {
    fn zero_like(&self) -> Self {
        RatQT::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, s: &RatQT) -> Self {
        self * s
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// A rational function of `u`: `Σ_k num[k] u^k / Π_{i ∈ den_factors} (1 - t^i u)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct USeries<T> {
    pub num: Vec<T>,
    pub den_factors: Vec<i64>,
}

/// Coefficients in `u` of `Π_{i ∈ factors} (1 - t^i u)`.
pub fn factor_poly(factors: &[i64]) -> Vec<RatQT> {
    let mut c = vec![RatQT::one()];
    for &i in factors {
        let ti = RatQT::t_pow(i);
        let mut next = c.clone();
        next.push(RatQT::zero());
        for (j, cj) in c.iter().enumerate() {
            next[j + 1] -= &(cj * &ti);
        }
        c = next;
    }
    c
}

/// Product of two polynomials in `u` with scalar coefficients.
pub fn mul_scalar_polys(a: &[RatQT], b: &[RatQT]) -> Vec<RatQT> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatQT::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

impl<T: SeriesCoeff> USeries<T> {
    /// # Panics
    /// If `num` is empty; a zero series still needs one coefficient to fix its kind.
    pub fn new(num: Vec<T>, mut den_factors: Vec<i64>) -> Self {
        assert!(!num.is_empty(), "series needs at least one coefficient");
        den_factors.sort_unstable();
        Self { num, den_factors }
    }

    pub fn constant(f: T) -> Self {
        Self::new(vec![f], Vec::new())
    }

    /// `r(u) · f` for the scalar rational function `num(u) / Π_{i ∈ den} (1 - t^i u)`.
    pub fn scalar_times(num: &[RatQT], den_factors: Vec<i64>, f: &T) -> Self {
        let coeffs = if num.is_empty() {
            vec![f.zero_like()]
        } else {
            num.iter().map(|c| f.times(c)).collect()
        };
        Self::new(coeffs, den_factors)
    }

    fn zero_coeff(&self) -> T {
        self.num[0].zero_like()
    }

    /// Numerator multiplied by a scalar polynomial in `u`.
    pub fn numerator_times(&self, p: &[RatQT]) -> Vec<T> {
        let zero = self.zero_coeff();
        let mut out = vec![zero; self.num.len() + p.len().max(1) - 1];
        for (i, a) in self.num.iter().enumerate() {
            for (j, c) in p.iter().enumerate() {
                if !c.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(c));
                }
            }
        }
        out
    }

    /// Apply a linear map coefficientwise.
    pub fn map<U: SeriesCoeff, F: FnMut(&T) -> U>(&self, f: F) -> USeries<U> {
        USeries::new(self.num.iter().map(f).collect(), self.den_factors.clone())
    }

    /// Add another series over the common denominator.
    pub fn plus(&self, other: &Self) -> Self {
        let (den, extra_a, extra_b) = merge_factors(&self.den_factors, &other.den_factors);
        let a = self.numerator_times(&factor_poly(&extra_a));
        let b = other.numerator_times(&factor_poly(&extra_b));
        let n = a.len().max(b.len());
        let zero = self.zero_coeff();
        let num = (0..n)
            .map(|k| match (a.get(k), b.get(k)) {
                (Some(x), Some(y)) => x.plus(y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => zero.clone(),
            })
            .collect();
        Self::new(num, den)
    }

    /// First power of `u` at which the cross-multiplied numerators differ, with the
    /// two coefficients there.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, T, T)> {
        let a = self.numerator_times(&factor_poly(&other.den_factors));
        let b = other.numerator_times(&factor_poly(&self.den_factors));
        let zero = self.zero_coeff();
        for k in 0..a.len().max(b.len()) {
            let x = a.get(k).unwrap_or(&zero);
            let y = b.get(k).unwrap_or(&zero);
            if x != y {
                return Some((k, x.clone(), y.clone()));
            }
        }
        None
    }

    /// Equality as rational functions of `u`, by cross-multiplication.
    pub fn same_function(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    /// Taylor coefficients at `u = 0` up to `u^order`.
    pub fn taylor(&self, order: usize) -> Vec<T> {
        // Divide by each factor (1 - c u) in turn: b_k = a_k + c b_{k-1}.
        let zero = self.zero_coeff();
        let mut s: Vec<T> = (0..=order)
            .map(|k| self.num.get(k).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        for &i in &self.den_factors {
            let c = RatQT::t_pow(i);
            for k in 1..=order {
                let prev = s[k - 1].times(&c);
                s[k] = s[k].plus(&prev);
            }
        }
        s
    }
}

impl<T: SeriesCoeff> PartialEq for USeries<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_function(other)
    }
}

/// Union of two factor multisets, and what each side is missing from it.
fn merge_factors(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    let mut rest_b = b.to_vec();
    let mut only_a = Vec::new();
    for &x in a {
        if let Some(pos) = rest_b.iter().position(|&y| y == x) {
            rest_b.remove(pos);
        } else {
            only_a.push(x);
        }
    }
    let mut all = a.to_vec();
    all.extend(&rest_b);
    (all, rest_b, only_a)
}
