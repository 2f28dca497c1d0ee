//! `t`-analogues of factorials, binomials and the Pochhammer symbol.

use num_bigint::BigInt;

use crate::scalar::{PolyQT, RatQT};

fn one_minus_t_pow(i: usize) -> PolyQT {
    PolyQT::one().sub(&PolyQT::monomial(1, 0, i))
}

/// `φ_n(t) = (1-t)(1-t^2)...(1-t^n)`.
pub fn phi(n: usize) -> PolyQT {
    (1..=n).fold(PolyQT::one(), |acc, i| acc.mul(&one_minus_t_pow(i)))
}

/// `[n]_t! = φ_n(t) / (1-t)^n`, a polynomial in `t`.
pub fn t_factorial(n: usize) -> PolyQT {
    (1..=n).fold(PolyQT::one(), |acc, i| acc.mul(&t_integer(i)))
}

/// `[n]_t = 1 + t + ... + t^{n-1}`.
pub fn t_integer(n: usize) -> PolyQT {
    PolyQT::from_terms((0..n).map(|j| (0, j, 1)))
}

/// Gaussian binomial `[n choose k]_t`; zero when `k < 0` or `k > n`.
pub fn t_binomial(n: i64, k: i64) -> PolyQT {
    if n < 0 || k < 0 || k > n {
        return PolyQT::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let k = k.min(n - k);
    // Pascal recurrence [m, j] = [m-1, j-1] + t^j [m-1, j], row by row.
    let mut row: Vec<PolyQT> = vec![PolyQT::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=m.min(k) {
            let left = if j > 0 { row[j - 1].clone() } else { PolyQT::zero() };
            let right = if j < row.len() && j < m {
                row[j].shift(0, j)
            } else {
                PolyQT::zero()
            };
            next.push(left.add(&right));
        }
        row = next;
    }
    row[k].clone()
}

/// Coefficients in `u` of `(u; t)_k = Π_{i=0}^{k-1} (1 - t^i u)`, lowest degree first.
pub fn pochhammer_coeffs(k: usize) -> Vec<PolyQT> {
    let mut c = vec![PolyQT::one()];
    for i in 0..k {
        let mut next = c.clone();
        next.push(PolyQT::zero());
        for (j, cj) in c.iter().enumerate() {
            next[j + 1] = next[j + 1].sub(&cj.shift(0, i));
        }
        c = next;
    }
    c
}

/// `(a; t)_k = Π_{i=0}^{k-1} (1 - t^i a)` evaluated at a field element.
pub fn pochhammer(a: &RatQT, k: usize) -> RatQT {
    (0..k).fold(RatQT::one(), |acc, i| acc * (RatQT::one() - RatQT::t_pow(i as i64) * a))
}

/// `(a; q)_k` with base `q`.
pub fn q_pochhammer(a: &RatQT, k: usize) -> RatQT {
    (0..k).fold(RatQT::one(), |acc, i| acc * (RatQT::one() - RatQT::q_pow(i as i64) * a))
}

/// Integer binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert!(t_binomial(3, -1).is_zero());
        assert_eq!(t_binomial(2, 1), PolyQT::from_terms([(0, 0, 1), (0, 1, 1)]));
        for n in 0..7 {
            for k in 0..=n {
                assert_eq!(t_binomial(n, k), t_binomial(n, n - k));
                assert_eq!(t_binomial(n, k).eval_one(), binomial(n as usize, k as usize));
                let lhs = t_binomial(n, k).mul(&phi(k as usize)).mul(&phi((n - k) as usize));
                assert_eq!(lhs, phi(n as usize));
            }
        }
    }

    #[test]
    fn pochhammer_first_factor() {
        let c = pochhammer_coeffs(1);
        assert_eq!(c, vec![PolyQT::one(), PolyQT::constant(-1)]);
        let c2 = pochhammer_coeffs(2);
        assert_eq!(c2[1], PolyQT::from_terms([(0, 0, -1), (0, 1, -1)]));
        assert_eq!(c2[2], PolyQT::t());
    }
}
