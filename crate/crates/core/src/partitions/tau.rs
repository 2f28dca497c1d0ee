use super::qanalog::t_binomial;
use super::Partition;
use crate::scalar::RatQT;

/// `τ_{λ/μ}(t; N)`, the coefficient of `P_μ` in the expansion of the
/// inhomogeneous Hall-Littlewood polynomial `F_λ`; zero unless `λ/μ` is a vertical strip.
pub fn tau_coeff(lambda: &Partition, mu: &Partition, n: usize) -> RatQT {
    if !lambda.is_vertical_strip_over(mu) {
        return RatQT::zero();
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let col = |p: &Partition, i: usize| p.part(i) as i64;
    let mut acc = t_binomial(n as i64 - col(&mc, 1), col(&lc, 1) - col(&mc, 1));
    for i in 1..=lambda.part(1).max(1) {
        acc = acc.mul(&t_binomial(
            col(&mc, i) - col(&mc, i + 1),
            col(&lc, i + 1) - col(&mc, i + 1),
        ));
    }
    let d = (lambda.size() - mu.size()) as i64;
    let sign = if d % 2 == 1 { -1 } else { 1 };
    RatQT::from_poly(acc) * RatQT::t_pow((1 - n as i64) * d) * RatQT::from_int(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::qanalog::t_integer;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn tau_examples() {
        for n in 1..5 {
            for l in [p(&[1]), p(&[2, 1]), p(&[2, 2])] {
                if l.len() > n {
                    continue;
                }
                assert!(tau_coeff(&l, &l, n).is_one());
            }
            let expect = -RatQT::t_pow(1 - n as i64) * RatQT::from_poly(t_integer(n));
            assert_eq!(tau_coeff(&p(&[1]), &Partition::empty(), n), expect);
        }
        assert!(tau_coeff(&p(&[3, 1]), &p(&[1, 1]), 3).is_zero());
        assert!(tau_coeff(&p(&[2]), &Partition::empty(), 3).is_zero());
    }
}
