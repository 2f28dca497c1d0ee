//! Semistandard tableaux and their Hall-Littlewood weights.

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::scalar::{PolyQT, RatQT};

/// A column-strict filling with entries in `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Partition,
    /// `rows[i][j]` is the entry in row `i+1`, column `j+1`.
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Entry at 1-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// Shape of the cells filled with numbers `≤ k`.
    pub fn sub_shape(&self, k: usize) -> Partition {
        Partition::from_unsorted(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|&&e| e <= k).count())
                .collect(),
        )
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_valid(&self, n: usize) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&e| e >= 1 && e <= n));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| b > a));
        rows_ok && cols_ok
    }
}

/// All semistandard tableaux of shape `mu` with entries at most `n` that satisfy
/// `allow(i, j, entry)` at every cell (1-based row and column).
pub fn enumerate_ssyt<F>(mu: &Partition, n: usize, allow: F) -> Vec<Tableau>
where
    F: Fn(usize, usize, usize) -> bool,
{
    let mut out = Vec::new();
    if mu.len() > n {
        return out;
    }
    let cells: Vec<(usize, usize)> = mu.cells().collect();
    let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
    fill(&cells, 0, n, &allow, &mut rows, &mut out, mu);
    out
}

fn fill<F>(
    cells: &[(usize, usize)],
    k: usize,
    n: usize,
    allow: &F,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
    shape: &Partition,
) where
    F: Fn(usize, usize, usize) -> bool,
{
    if k == cells.len() {
        out.push(Tableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    let (i, j) = cells[k];
    let left = if j > 1 { rows[i - 1][j - 2] } else { 1 };
    let above = if i > 1 { rows[i - 2][j - 1] + 1 } else { 1 };
    for e in left.max(above)..=n {
        if !allow(i, j, e) {
            continue;
        }
        rows[i - 1][j - 1] = e;
        fill(cells, k + 1, n, allow, rows, out, shape);
    }
    rows[i - 1][j - 1] = 0;
}

/// `ψ_{ν/κ}(t)` for a horizontal strip `ν/κ`.
pub fn psi_strip(nu: &Partition, kappa: &Partition) -> PolyQT {
    let nc = nu.conjugate();
    let kc = kappa.conjugate();
    let theta = |j: usize| nc.part(j) - kc.part(j);
    let mut acc = PolyQT::one();
    for j in 1..=nu.part(1) {
        if theta(j) == 0 && theta(j + 1) == 1 {
            let m = kappa.multiplicity(j);
            acc = acc.mul(&PolyQT::one().sub(&PolyQT::monomial(1, 0, m)));
        }
    }
    acc
}

/// `ψ_T(t) = Π_k ψ_{μ(k)/μ(k-1)}(t)` over the chain of sub-shapes of `T`.
pub fn psi_weight(t: &Tableau) -> RatQT {
    let top = t.max_entry();
    let mut acc = PolyQT::one();
    let mut prev = Partition::empty();
    for k in 1..=top {
        let cur = t.sub_shape(k);
        acc = acc.mul(&psi_strip(&cur, &prev));
        prev = cur;
    }
    RatQT::from_poly(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_ssyt(&p(&[1]), 2, |_, _, _| true).len(), 2);
        let col = enumerate_ssyt(&p(&[1, 1]), 2, |_, _, _| true);
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].rows, vec![vec![1], vec![2]]);
        assert_eq!(enumerate_ssyt(&p(&[2]), 2, |_, _, _| true).len(), 3);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2, |_, _, _| true).is_empty());
    }

    #[test]
    fn counts_match_brute_force() {
        for shape in [p(&[2, 1]), p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1])] {
            for n in 1usize..=4 {
                let cells: Vec<_> = shape.cells().collect();
                let mut brute = 0;
                let total = n.pow(cells.len() as u32);
                for code in 0..total {
                    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
                    let mut c = code;
                    for &(i, j) in &cells {
                        rows[i - 1][j - 1] = c % n + 1;
                        c /= n;
                    }
                    let t = Tableau {
                        shape: shape.clone(),
                        rows,
                    };
                    if t.is_valid(n) {
                        brute += 1;
                    }
                }
                assert_eq!(enumerate_ssyt(&shape, n, |_, _, _| true).len(), brute);
            }
        }
    }

    #[test]
    fn psi_weights() {
        let single = Tableau {
            shape: p(&[1]),
            rows: vec![vec![2]],
        };
        assert!(psi_weight(&single).is_one());
        let t = Tableau {
            shape: p(&[2]),
            rows: vec![vec![1, 2]],
        };
        assert_eq!(psi_weight(&t), RatQT::one() - RatQT::t());
    }
}
