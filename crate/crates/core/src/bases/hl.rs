use std::sync::LazyLock;

use super::{memo_poly, x_spec, BasisError, Key};
use crate::cache::Memo;
use crate::partitions::Partition;
use crate::polyengine::{symmetrize, Group, MPoly};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::{lift_to_lambda, PiMap, PiVariant, SymFuncP};

static HL_P: LazyLock<Memo<Key, MPoly>> = LazyLock::new(Memo::new);
static HL_P_FUNC: LazyLock<Memo<Partition, SymFuncP>> = LazyLock::new(Memo::new);

/// `Π_{i≥0} Π_{j=1}^{m_i} (1-t)/(1-t^j)` with `m_0 = n - ℓ(λ)`.
pub fn hl_prefactor(lambda: &Partition, n: usize) -> RatQT {
    let mut acc = RatQT::one();
    let mut mults: Vec<usize> = lambda.multiplicities().into_iter().map(|(_, m)| m).collect();
    mults.push(n - lambda.len());
    for m in mults {
        for j in 2..=m as i64 {
            acc = acc * one_minus_monomial(0, 1) / one_minus_monomial(0, j);
        }
    }
    acc
}

/// `b_λ(t) = Π_{i≥1} Π_{j=1}^{m_i} (1 - t^j)`.
pub fn b_lambda(lambda: &Partition) -> RatQT {
    let mut acc = RatQT::one();
    for (_, m) in lambda.multiplicities() {
        for j in 1..=m as i64 {
            acc = acc * one_minus_monomial(0, j);
        }
    }
    acc
}

/// `x^λ Π_{i<j} (x_i - t x_j)`, the numerator shared by the symmetrization formulas.
pub(crate) fn hl_numerator(spec: &std::sync::Arc<crate::polyengine::VarSpec>, lead: MPoly) -> MPoly {
    let n = spec.arity(Group::X);
    let mut num = lead;
    let t = RatQT::t();
    for i in 0..n {
        for j in i + 1..n {
            let f = MPoly::var(spec, Group::X, i).sub(&MPoly::var(spec, Group::X, j).scale(&t));
            num = num.mul(&f);
        }
    }
    num
}

/// The Hall-Littlewood polynomial `P_λ(x_1..x_n; t)`; zero when `ℓ(λ) > n`.
pub fn hl_p(lambda: &Partition, n: usize) -> MPoly {
    let spec = x_spec(n);
    if lambda.len() > n {
        return MPoly::zero(&spec);
    }
    if lambda.is_empty() {
        return MPoly::one(&spec);
    }
    memo_poly(&HL_P, Key::new("hl_p", lambda, n), || {
        let exps: Vec<u16> = lambda.padded(n).iter().map(|&e| e as u16).collect();
        let lead = MPoly::monomial(&spec, &exps, RatQT::one());
        let p = symmetrize(&hl_numerator(&spec, lead)).scale(&hl_prefactor(lambda, n));
        assert!(
            p.terms().values().all(|c| c.is_integer_t_polynomial()),
            "Hall-Littlewood coefficients must lie in Z[t]"
        );
        Ok::<_, BasisError>(p)
    })
    .expect("Hall-Littlewood construction is infallible")
}

/// `P_λ(·; t)` as a symmetric function.
pub fn hl_p_func(lambda: &Partition) -> SymFuncP {
    HL_P_FUNC.get_or_insert_with(lambda, || {
        let n = lambda.size() + 1;
        lift_to_lambda(&hl_p(lambda, n), &PiMap::new(PiVariant::Plain, n)).expect("stable Hall-Littlewood lift")
    })
}

/// `Q_λ(·; t) = b_λ(t) P_λ(·; t)`.
pub fn hl_q_func(lambda: &Partition) -> SymFuncP {
    hl_p_func(lambda).scale(&b_lambda(lambda))
}

pub(crate) fn clear_memos() {
    HL_P.clear();
    HL_P_FUNC.clear();
}
