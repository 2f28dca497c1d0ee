use serde::{Deserialize, Serialize};

use crate::partitions::Partition;
use crate::scalar::{one_minus_monomial, sign, RatQT};

/// Closed-form values of interpolation Macdonald polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialValue {
    /// Value at the partition's own point.
    CNorm,
    /// Value at the origin.
    AtZeros,
    /// Value at the geometric point `(a, a t, …, a t^{N-1})`.
    Principal(RatQT),
}

/// `C(λ)`, the value at `0^N`, or the principal specialization, as products over cells.
pub fn special_values(lambda: &Partition, n: usize, which: &SpecialValue) -> RatQT {
    let stats = lambda.cell_stats();
    let nl = lambda.n() as i64;
    let nc = lambda.conjugate().n() as i64;
    let size = lambda.size() as i64;
    let n = n as i64;
    match which {
        SpecialValue::CNorm => {
            let mut acc = RatQT::monomial(-2 * nc - size, nl);
            for (_, s) in &stats {
                acc = acc * one_minus_monomial(s.arm as i64 + 1, s.leg as i64);
            }
            acc
        }
        SpecialValue::AtZeros => {
            let mut acc = sign(size % 2 == 1) * RatQT::monomial(-nc, 2 * nl);
            for (_, s) in &stats {
                acc = acc * one_minus_monomial(s.coarm as i64, n - s.coleg as i64)
                    / one_minus_monomial(s.arm as i64, s.leg as i64 + 1);
            }
            acc
        }
        SpecialValue::Principal(a) => {
            let mut acc = RatQT::t_pow(nl);
            for (_, s) in &stats {
                let shifted = a - &RatQT::monomial(-(s.coarm as i64), s.coleg as i64);
                acc = acc * one_minus_monomial(s.coarm as i64, n - s.coleg as i64) * shifted
                    / one_minus_monomial(s.arm as i64, s.leg as i64 + 1);
            }
            acc
        }
    }
}
