use super::*;
use crate::partitions::{partitions_up_to, Partition};
use crate::polyengine::{monomial_symmetric, Group, MPoly};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::{apply_pi, inner_product_qt, PiMap, PiVariant, SymFuncP};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn x(n: usize, i: usize) -> MPoly {
    MPoly::var(&x_spec(n), Group::X, i)
}

fn c(n: usize, v: RatQT) -> MPoly {
    MPoly::constant(&x_spec(n), v)
}

#[test]
fn hl_small_cases() {
    assert_eq!(hl_p(&Partition::empty(), 3), MPoly::one(&x_spec(3)));
    assert_eq!(hl_p(&p(&[1]), 2), x(2, 0).add(&x(2, 1)));
    let expect = x(2, 0)
        .pow(2)
        .add(&x(2, 1).pow(2))
        .add(&x(2, 0).mul(&x(2, 1)).scale(&one_minus_monomial(0, 1)));
    assert_eq!(hl_p(&p(&[2]), 2), expect);
    assert!(hl_p(&p(&[1, 1, 1]), 2).is_zero());
    // P_{(1^k)} = e_k.
    assert_eq!(hl_p(&p(&[1, 1]), 3), monomial_symmetric(&x_spec(3), &p(&[1, 1])));
}

#[test]
fn hl_stability() {
    for lam in partitions_up_to(3, 4) {
        for n in 1..=3 {
            let big = hl_p(&lam, n + 1).set_zero(Group::X, n);
            let small = hl_p(&lam, n).embed(&x_spec(n + 1)).unwrap();
            assert_eq!(big, small, "{lam} at N = {n}");
        }
    }
}

#[test]
fn hl_q_function() {
    let q1 = hl_q_func(&p(&[1]));
    assert_eq!(q1, SymFuncP::p_n(1).scale(&one_minus_monomial(0, 1)));
    assert_eq!(hl_q_func(&Partition::empty()), SymFuncP::one());
    let b = one_minus_monomial(0, 1) * one_minus_monomial(0, 2);
    assert_eq!(hl_q_func(&p(&[1, 1])), hl_p_func(&p(&[1, 1])).scale(&b));
}

#[test]
fn macdonald_basics() {
    assert_eq!(macdonald_func(&p(&[1])), SymFuncP::p_n(1));
    let m2 = macdonald_func(&p(&[2]));
    let m11 = macdonald_func(&p(&[1, 1]));
    assert!(inner_product_qt(&m2, &m11).is_zero());
    // q = 0 gives Hall-Littlewood.
    for lam in [p(&[2]), p(&[2, 1]), p(&[3]), p(&[1, 1, 1])] {
        let at0 = macdonald_func(&lam).map_coeffs(|c| c.eval_q0().unwrap());
        assert_eq!(at0, hl_p_func(&lam), "{lam}");
    }
}

#[test]
fn interp_examples() {
    for n in 1..=3 {
        let i1 = interp_macdonald(&p(&[1]), n).unwrap();
        let mut expect = monomial_symmetric(&x_spec(n), &p(&[1]));
        expect = expect.sub(&c(n, RatQT::from_poly(crate::partitions::t_integer(n))));
        assert_eq!(i1, expect);
        let at = special_values(&p(&[1]), n, &SpecialValue::AtZeros);
        assert_eq!(i1.constant_term(), at);
    }
    assert_eq!(
        special_values(&p(&[1]), 2, &SpecialValue::CNorm),
        RatQT::q_pow(-1) * one_minus_monomial(1, 0)
    );
    assert!(special_values(&Partition::empty(), 3, &SpecialValue::AtZeros).is_one());
    assert_eq!(
        interp_macdonald(&Partition::empty(), 2).unwrap(),
        MPoly::one(&x_spec(2))
    );
}

#[test]
fn interp_properties() {
    for n in 1..=3 {
        for lam in partitions_up_to(3, n) {
            let i = interp_macdonald(&lam, n).unwrap();
            assert!(i.is_symmetric_in(Group::X));
            for nu in partitions_up_to(lam.size(), n) {
                let v = i.eval_x(&partition_point(&nu, n));
                if nu == lam {
                    assert_eq!(v, special_values(&lam, n, &SpecialValue::CNorm));
                } else {
                    assert!(v.is_zero(), "{lam} at {nu}, N = {n}");
                }
            }
            let zero = vec![RatQT::zero(); n];
            assert_eq!(i.eval_x(&zero), special_values(&lam, n, &SpecialValue::AtZeros));
            for a in [RatQT::t_pow(2), RatQT::q_pow(-1), RatQT::monomial(1, 1) + RatQT::one()] {
                let pt: Vec<RatQT> = (0..n).map(|k| &a * &RatQT::t_pow(k as i64)).collect();
                assert_eq!(
                    i.eval_x(&pt),
                    special_values(&lam, n, &SpecialValue::Principal(a.clone()))
                );
            }
            // Stability under x_{n+1} = t^n.
            let up = interp_macdonald(&lam, n + 1).unwrap();
            let restricted = up.substitute_scalar(Group::X, n, &RatQT::t_pow(n as i64));
            assert_eq!(restricted, i.embed(&x_spec(n + 1)).unwrap());
            // Top-degree part is the Macdonald polynomial.
            let d = lam.size() as u16;
            let top = i.map_monomials(|m| {
                let e = m.group_degree(i.spec(), 0);
                (e == d).then(|| (m.clone(), RatQT::one()))
            });
            assert_eq!(top, macdonald_poly(&lam, n), "{lam}");
        }
    }
}

#[test]
fn interp_function_lift() {
    let f = interp_func(&p(&[1])).unwrap();
    let expect = SymFuncP::p_n(1).sub(&SymFuncP::constant(RatQT::one() / one_minus_monomial(0, 1)));
    assert_eq!(f, expect);
    let f2 = interp_func(&p(&[2, 1])).unwrap();
    for n in 2..=4 {
        assert_eq!(
            apply_pi(&PiMap::new(PiVariant::Interp, n), &f2),
            interp_macdonald(&p(&[2, 1]), n).unwrap()
        );
    }
}

#[test]
fn inhom_examples() {
    assert_eq!(
        inhom_f(&Partition::empty(), 3, FRoute::Definition).unwrap(),
        MPoly::one(&x_spec(3))
    );
    let f1 = inhom_f(&p(&[1]), 1, FRoute::Definition).unwrap();
    assert_eq!(f1, x(1, 0).sub(&c(1, RatQT::one())));
    let f12 = inhom_f(&p(&[1]), 2, FRoute::Definition).unwrap();
    let expect = x(2, 0).add(&x(2, 1)).sub(&c(2, RatQT::one() + RatQT::t_pow(-1)));
    assert_eq!(f12, expect);
    // ℓ(λ) = N: F = Π (1 - t^{1-N}/x_i) P_λ, checked after multiplying by x_1..x_N.
    let lam = p(&[2, 1]);
    let f = inhom_f(&lam, 2, FRoute::Definition).unwrap();
    let mut rhs = hl_p(&lam, 2);
    for i in 0..2 {
        rhs = rhs.mul(&x(2, i).sub(&c(2, RatQT::t_pow(-1))));
    }
    assert_eq!(f.mul_monomial(&[1, 1]), rhs);
    assert!(inhom_f(&p(&[1, 1, 1]), 2, FRoute::Tableau).unwrap().is_zero());
}

#[test]
fn inhom_routes_agree() {
    for n in 1..=3 {
        for lam in partitions_up_to(3, n) {
            let f = inhom_f_all_routes(&lam, n).unwrap();
            assert_eq!(limit_q0_interp(&lam, n).unwrap(), f, "{lam}, N = {n}");
        }
    }
}

#[test]
fn inhom_coherence_and_lift() {
    for lam in partitions_up_to(3, 3) {
        for n in 2..=3 {
            let big = inhom_f(&lam, n, FRoute::Definition).unwrap();
            let restricted = big.substitute_scalar(Group::X, n - 1, &RatQT::t_pow(1 - n as i64));
            let small = inhom_f(&lam, n - 1, FRoute::Definition).unwrap();
            assert_eq!(restricted, small.embed(&x_spec(n)).unwrap(), "{lam}, N = {n}");
        }
        let func = inhom_f_func(&lam, TVariant::T).unwrap();
        for n in lam.len().max(1)..=4 {
            let img = apply_pi(&PiMap::new(PiVariant::Hl, n), &func);
            assert_eq!(img, inhom_f(&lam, n, FRoute::Definition).unwrap());
        }
        assert_eq!(func.component(lam.size()), hl_p_func(&lam));
    }
    assert_eq!(
        inhom_f_func(&Partition::empty(), TVariant::TInverse).unwrap(),
        SymFuncP::one()
    );
}

#[test]
fn memo_disk_round_trip() {
    let key = Key::new("hl_p", &p(&[2, 1]), 3);
    assert_eq!(key.disk_name(), "hl_p_2-1_N3");
    let poly = hl_p(&p(&[2, 1]), 3);
    let text = serde_json::to_string(&poly).unwrap();
    let back: MPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(back, poly);
}

#[test]
fn parse_enums() {
    assert_eq!("inhom_f".parse::<Family>().unwrap(), Family::InhomF);
    assert_eq!("HL_P".parse::<Family>().unwrap(), Family::HlP);
    assert_eq!("tau_expansion".parse::<FRoute>().unwrap(), FRoute::TauExpansion);
    assert_eq!("t_inverse".parse::<TVariant>().unwrap(), TVariant::TInverse);
    assert!("nope".parse::<FRoute>().is_err());
}
