//! Exact linear systems over `Q(q, t)`.

use crate::scalar::RatQT;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("system is rank deficient")]
    Singular,
    #[error("system is inconsistent")]
    Inconsistent,
}

fn weight(c: &RatQT) -> usize {
    c.numer().num_terms() + c.denom().num_terms()
}

/// Solve `A x = b` for a system with at least as many equations as unknowns and
/// full column rank, by fraction-free (Bareiss) elimination. Surplus equations
/// must be consistent.
pub fn solve(a: &[Vec<RatQT>], b: &[RatQT]) -> Result<Vec<RatQT>, LinalgError> {
    let rows = a.len();
    let n = a.first().map_or(0, |r| r.len());
    if rows < n {
        return Err(LinalgError::Singular);
    }
    let mut m: Vec<Vec<RatQT>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut prev = RatQT::one();
    for k in 0..n {
        let pivot = (k..rows)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| weight(&m[r][k]))
            .ok_or(LinalgError::Singular)?;
        m.swap(k, pivot);
        let prev_inv = prev.inv().expect("nonzero pivot");
        for i in k + 1..rows {
            let lead = m[i][k].clone();
            for j in k + 1..=n {
                let v = &(&m[k][k] * &m[i][j]) - &(&lead * &m[k][j]);
                m[i][j] = v * &prev_inv;
            }
            m[i][k] = RatQT::zero();
        }
        prev = m[k][k].clone();
    }
    if m[n..].iter().any(|r| !r[n].is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    let mut x = vec![RatQT::zero(); n];
    for k in (0..n).rev() {
        let mut acc = m[k][n].clone();
        for j in k + 1..n {
            acc -= &(&m[k][j] * &x[j]);
        }
        x[k] = acc / &m[k][k];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> RatQT {
        RatQT::from_int(v)
    }

    #[test]
    fn solves_square_and_overdetermined() {
        let a = vec![vec![RatQT::q(), r(1)], vec![r(1), RatQT::t()]];
        let x = vec![r(2), RatQT::q()];
        let b: Vec<RatQT> = a.iter().map(|row| &(&row[0] * &x[0]) + &(&row[1] * &x[1])).collect();
        assert_eq!(solve(&a, &b).unwrap(), x);

        let mut a2 = a.clone();
        a2.push(vec![r(1), r(1)]);
        let mut b2 = b.clone();
        b2.push(&x[0] + &x[1]);
        assert_eq!(solve(&a2, &b2).unwrap(), x);
        b2[2] = b2[2].clone() + r(1);
        assert_eq!(solve(&a2, &b2), Err(LinalgError::Inconsistent));
    }

    #[test]
    fn singular() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert_eq!(solve(&a, &[r(1), r(2)]), Err(LinalgError::Singular));
    }
}
