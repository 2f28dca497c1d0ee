use std::sync::Arc;

use super::*;
use crate::polyengine::{Group, MPoly, VarSpec};
use crate::scalar::RatQT;

fn p(v: &[usize]) -> Partition {
    Partition::from(v.to_vec())
}

fn omt(a: i64, b: i64) -> RatQT {
    one_minus_monomial(a, b)
}

#[test]
fn products() {
    assert_eq!(SymFuncP::p_n(1).mul(&SymFuncP::p_n(1)), SymFuncP::p(p(&[1, 1])));
    assert_eq!(
        SymFuncP::p_n(2).mul(&SymFuncP::p(p(&[2, 1]))),
        SymFuncP::p(p(&[2, 2, 1]))
    );
    let a = SymFuncP::p(p(&[3, 1])).scale(&RatQT::q());
    assert_eq!(SymFuncP::one().mul(&a), a);
}

#[test]
fn inner_products() {
    let p1 = SymFuncP::p_n(1);
    let p11 = SymFuncP::p(p(&[1, 1]));
    assert_eq!(inner_product_qt(&p1, &p1), omt(1, 0) / omt(0, 1));
    assert!(inner_product_qt(&SymFuncP::p_n(2), &p11).is_zero());
    let expect = RatQT::from_int(2) * (omt(1, 0) / omt(0, 1)).pow(2).unwrap();
    assert_eq!(inner_product_qt(&p11, &p11), expect);
}

#[test]
fn adjoints() {
    let p1 = SymFuncP::p_n(1);
    let p11 = SymFuncP::p(p(&[1, 1]));
    assert_eq!(p1.apply_adjoint_of(&p1), SymFuncP::constant(omt(1, 0) / omt(0, 1)));
    assert!(p11.apply_adjoint_of(&SymFuncP::p_n(2)).is_zero());
    let lhs = inner_product_qt(&p1.mul(&p1), &p11);
    let rhs = inner_product_qt(&p1, &p11.apply_adjoint_of(&p1));
    assert_eq!(lhs, rhs);
    let expect = RatQT::from_int(2) * (omt(1, 0) / omt(0, 1)).pow(2).unwrap();
    assert_eq!(lhs, expect);
}

#[test]
fn adjoint_identity_on_monomial_triples() {
    let all = crate::partitions::partitions_up_to(5, 5);
    for f in &all {
        for a in &all {
            let fa = f.union(a);
            if fa.size() > 5 || f.is_empty() {
                continue;
            }
            let b = fa.clone();
            let (f, a, b) = (SymFuncP::p(f.clone()), SymFuncP::p(a.clone()), SymFuncP::p(b));
            assert_eq!(
                inner_product_qt(&f.mul(&a), &b),
                inner_product_qt(&a, &b.apply_adjoint_of(&f))
            );
        }
    }
}

#[test]
fn specializations() {
    let plain = PiMap::new(PiVariant::Plain, 2);
    let spec = plain.spec();
    let x = |i| MPoly::var(&spec, Group::X, i);
    assert_eq!(apply_pi(&plain, &SymFuncP::p_n(2)), x(0).pow(2).add(&x(1).pow(2)));
    let hl = PiMap::new(PiVariant::Hl, 1);
    let s1 = hl.spec();
    let expect = MPoly::var(&s1, Group::X, 0).add(&MPoly::constant(&s1, RatQT::t_pow(-1) / omt(0, -1)));
    assert_eq!(apply_pi(&hl, &SymFuncP::p_n(1)), expect);
    let ip = PiMap::new(PiVariant::Interp, 1);
    let expect = MPoly::var(&s1, Group::X, 0).add(&MPoly::constant(&s1, RatQT::t() / omt(0, 1)));
    assert_eq!(apply_pi(&ip, &SymFuncP::p_n(1)), expect);
}

#[test]
fn specialization_is_multiplicative() {
    for variant in [PiVariant::Hl, PiVariant::Interp, PiVariant::Plain] {
        let map = PiMap::new(variant, 2);
        let f = SymFuncP::p(p(&[2, 1])).add(&SymFuncP::constant(RatQT::q()));
        let g = SymFuncP::p_n(1).sub(&SymFuncP::p(p(&[1, 1])).scale(&RatQT::t()));
        assert_eq!(apply_pi(&map, &f.mul(&g)), apply_pi(&map, &f).mul(&apply_pi(&map, &g)));
    }
}

#[test]
fn lifts_invert_specializations() {
    for variant in [PiVariant::Hl, PiVariant::Interp, PiVariant::Plain] {
        let map = PiMap::new(variant, 4);
        let f = SymFuncP::p(p(&[2, 1]))
            .add(&SymFuncP::p(p(&[1, 1, 1])).scale(&RatQT::t()))
            .add(&SymFuncP::p_n(1).scale(&RatQT::q()))
            .add(&SymFuncP::one());
        assert_eq!(lift_to_lambda(&apply_pi(&map, &f), &map).unwrap(), f);
    }
    let map = PiMap::new(PiVariant::Interp, 3);
    let spec = map.spec();
    let mut i1 = MPoly::constant(&spec, -(omt(0, 3) / omt(0, 1)));
    for i in 0..3 {
        i1.add_assign_ref(&MPoly::var(&spec, Group::X, i));
    }
    let g = lift_to_lambda(&i1, &map).unwrap();
    assert_eq!(g, SymFuncP::p_n(1).sub(&SymFuncP::constant(RatQT::one() / omt(0, 1))));
    let small = PiMap::new(PiVariant::Plain, 2);
    let s2 = small.spec();
    let cube = MPoly::var(&s2, Group::X, 0)
        .pow(2)
        .add(&MPoly::var(&s2, Group::X, 1).pow(2));
    assert!(matches!(
        lift_to_lambda(&cube, &small),
        Err(SymFuncError::AlphabetTooSmall { .. })
    ));
}

#[test]
fn hl_coherence_under_last_variable() {
    // Setting x_N = t^{1-N} in the N-variable image gives the (N-1)-variable image.
    let f = SymFuncP::p(p(&[2, 1])).add(&SymFuncP::p_n(3).scale(&RatQT::q()));
    for n in 2..=4usize {
        let big = apply_pi(&PiMap::new(PiVariant::Hl, n), &f);
        let cut = big.substitute_scalar(Group::X, n - 1, &RatQT::t_pow(1 - n as i64));
        let small = apply_pi(&PiMap::new(PiVariant::Hl, n - 1), &f)
            .embed(&Arc::new(VarSpec::x(n)))
            .unwrap();
        assert_eq!(cut, small);
    }
}

#[test]
fn t_inversion() {
    let q1 = SymFuncP::p_n(1).scale(&omt(0, 1));
    assert_eq!(q1.subst_t_inverse(), SymFuncP::p_n(1).scale(&omt(0, -1)));
    assert_eq!(q1.subst_t_inverse().subst_t_inverse(), q1);
}

#[test]
fn monomial_round_trip() {
    for lam in crate::partitions::partitions_up_to(5, 5) {
        let m = monomial_func(&lam);
        let back = m.to_monomial();
        assert_eq!(back.len(), 1);
        assert!(back[&lam].is_one());
    }
}

#[test]
fn json_shape() {
    let f = SymFuncP::p_n(2).add(&SymFuncP::p(p(&[1, 1])).scale(&RatQT::t()));
    let s = serde_json::to_string(&f).unwrap();
    assert!(s.starts_with(r#"{"basis":"p","terms":[[[2],"#), "{s}");
    let back: SymFuncP = serde_json::from_str(&s).unwrap();
    assert_eq!(back, f);
}
