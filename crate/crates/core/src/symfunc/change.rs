//! Change of basis between power sums and monomial symmetric functions.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parking_lot::RwLock;

use crate::partitions::{partitions_of, Partition};

/// Coefficient of `m_λ` in `p_μ`: the number of ways to distribute the parts of
/// `μ` among the rows of `λ` so that row `j` receives total `λ_j`.
pub fn p_to_m_coeff(mu: &Partition, lambda: &Partition) -> BigInt {
    fn rec(parts: &[usize], room: &mut Vec<usize>) -> BigInt {
        let Some((&first, rest)) = parts.split_first() else {
            return BigInt::from(room.iter().all(|&r| r == 0) as u8);
        };
        let mut total = BigInt::zero();
        for j in 0..room.len() {
            if room[j] >= first {
                room[j] -= first;
                total += rec(rest, room);
                room[j] += first;
            }
        }
        total
    }
    if mu.size() != lambda.size() {
        return BigInt::zero();
    }
    rec(mu.parts(), &mut lambda.parts().to_vec())
}

/// Transition data for degree `n`: partitions in reverse lexicographic order,
/// and `m_λ = Σ_μ inv[λ][μ] p_μ`.
pub struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub m_in_p: Vec<Vec<BigRational>>,
}

pub fn transition(n: usize) -> Arc<Transition> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().get(&n) {
        return t.clone();
    }
    let parts = partitions_of(n);
    let k = parts.len();
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    // r[a][b] = coefficient of m_{parts[b]} in p_{parts[a]}; nonzero only for b ≤ a.
    let r: Vec<Vec<BigRational>> = parts
        .iter()
        .map(|mu| parts.iter().map(|l| BigRational::from(p_to_m_coeff(mu, l))).collect())
        .collect();
    // Invert the lower-triangular matrix r row by row: p_a = Σ_{b≤a} r[a][b] m_b,
    // so m_a = (p_a - Σ_{b<a} r[a][b] m_b) / r[a][a].
    let mut inv: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k]; k];
    for a in 0..k {
        let mut row = vec![BigRational::zero(); k];
        row[a] = BigRational::one();
        for b in 0..a {
            if r[a][b].is_zero() {
                continue;
            }
            for c in 0..k {
                if !inv[b][c].is_zero() {
                    row[c] -= &r[a][b] * &inv[b][c];
                }
            }
        }
        for v in row.iter_mut() {
            *v /= &r[a][a];
        }
        inv[a] = row;
    }
    let t = Arc::new(Transition {
        parts,
        index,
        m_in_p: inv,
    });
    cache.write().insert(n, t.clone());
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_coefficients() {
        let p11 = Partition::from([1, 1]);
        assert_eq!(p_to_m_coeff(&p11, &Partition::from([2])), 1.into());
        assert_eq!(p_to_m_coeff(&p11, &p11), 2.into());
        assert_eq!(p_to_m_coeff(&Partition::from([2]), &p11), 0.into());
        let t = transition(2);
        // m_{11} = (p_{11} - p_2)/2
        let i11 = t.index[&p11];
        let i2 = t.index[&Partition::from([2])];
        assert_eq!(t.m_in_p[i11][i11], BigRational::new(1.into(), 2.into()));
        assert_eq!(t.m_in_p[i11][i2], BigRational::new((-1).into(), 2.into()));
    }
}
