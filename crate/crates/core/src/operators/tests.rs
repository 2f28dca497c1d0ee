use super::*;
use crate::bases::{interp_func, interp_macdonald, macdonald_func, macdonald_poly, x_spec};
use crate::partitions::{partitions_up_to, Partition};
use crate::polyengine::{monomial_symmetric, Group, MPoly};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::{apply_pi, PiMap, PiVariant, SymFuncP};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn elementary(vals: &[RatQT], r: usize) -> RatQT {
    let mut e = vec![RatQT::zero(); r + 1];
    e[0] = RatQT::one();
    for v in vals {
        for k in (1..=r).rev() {
            let add = &e[k - 1] * v;
            e[k] += &add;
        }
    }
    e[r].clone()
}

fn drop_last(f: &MPoly, n: usize) -> MPoly {
    let spec = x_spec(n);
    let mut out = MPoly::zero(&spec);
    for (e, c) in f.to_vec() {
        assert_eq!(e[n], 0);
        out.add_assign_ref(&MPoly::monomial(&spec, &e[..n], c));
    }
    out
}

#[test]
fn hn_examples() {
    let f = monomial_symmetric(&x_spec(2), &p(&[1]));
    assert_eq!(apply_hn(0, &f, 2).unwrap(), f);
    let eig = RatQT::monomial(1, 1) + RatQT::one();
    assert_eq!(apply_hn(1, &f, 2).unwrap(), f.scale(&eig));
    assert!(apply_hn(3, &f, 2).is_err());
}

#[test]
fn hn_diagonalizes_macdonald() {
    for n in 1..=3 {
        for lam in partitions_up_to(3, n) {
            let m = macdonald_poly(&lam, n);
            let spec: Vec<RatQT> = lam
                .padded(n)
                .iter()
                .enumerate()
                .map(|(i, &l)| RatQT::monomial(l as i64, (n - 1 - i) as i64))
                .collect();
            for r in 0..=n {
                assert_eq!(
                    apply_hn(r, &m, n).unwrap(),
                    m.scale(&elementary(&spec, r)),
                    "{lam}, r = {r}, N = {n}"
                );
            }
        }
    }
}

#[test]
fn hn_on_elementary() {
    let k_vars = 3;
    for i in 0..=k_vars {
        let e = monomial_symmetric(&x_spec(k_vars), &Partition::new(vec![1; i]).unwrap());
        let mut vals = Vec::new();
        for s in 1..=i {
            vals.push(RatQT::monomial(1, (k_vars - s) as i64));
        }
        for s in (0..k_vars - i).rev() {
            vals.push(RatQT::t_pow(s as i64));
        }
        for k in 0..=k_vars {
            assert_eq!(apply_hn(k, &e, k_vars).unwrap(), e.scale(&elementary(&vals, k)));
        }
    }
}

#[test]
fn dn_on_constants() {
    for n in 1..=3 {
        let one = MPoly::one(&x_spec(n));
        let d = apply_dn(&one, n).unwrap();
        let vals: Vec<RatQT> = (0..n).map(|i| RatQT::t_pow(-(i as i64))).collect();
        for k in 0..=n {
            assert_eq!(d.num[k], one.scale(&elementary(&vals, k)));
        }
    }
    // N = 1, f = x_1: D(z) x = x + z (q x - q + 1).
    let x = MPoly::var(&x_spec(1), Group::X, 0);
    let d = apply_dn(&x, 1).unwrap();
    assert_eq!(d.num[0], x);
    let one = MPoly::one(&x_spec(1));
    let expect = x.scale(&RatQT::q()).sub(&one.scale(&RatQT::q())).add(&one);
    assert_eq!(d.num[1], expect);
}

#[test]
fn dn_and_an_eigenrelations() {
    for n in 1..=3 {
        let one = MPoly::one(&x_spec(n));
        assert_eq!(apply_an(&one, n).unwrap(), USeries::constant(one.clone()));
        for mu in partitions_up_to(3, n) {
            let i = interp_macdonald(&mu, n).unwrap();
            let d = apply_dn(&i, n).unwrap();
            let vals: Vec<RatQT> = mu
                .padded(n)
                .iter()
                .enumerate()
                .map(|(k, &m)| RatQT::monomial(m as i64, -(k as i64)))
                .collect();
            for k in 0..=n {
                assert_eq!(d.num[k], i.scale(&elementary(&vals, k)), "{mu}, N = {n}, z^{k}");
            }
            let a = apply_an(&i, n).unwrap();
            let expect = USeries::scalar_times(&eigenvalue_numerator(&mu), (0..mu.len() as i64).collect(), &i);
            assert_eq!(a, expect, "{mu}, N = {n}");
        }
    }
}

#[test]
fn an_coherence() {
    for n in 2..=3 {
        for mu in partitions_up_to(2, n) {
            let i = interp_macdonald(&mu, n).unwrap();
            let f = i.add(&monomial_symmetric(&x_spec(n), &p(&[1])));
            let restrict = |g: &MPoly| g.substitute_scalar(Group::X, n - 1, &RatQT::t_pow(n as i64 - 1));
            let big = apply_an(&f, n).unwrap().map(restrict);
            let small_f = drop_last(&restrict(&f), n - 1);
            let small = apply_an(&small_f, n - 1).unwrap().map(|g| g.embed(&x_spec(n)).unwrap());
            assert_eq!(big, small, "{mu}, N = {n}");
        }
    }
}

#[test]
fn eigen_expansion() {
    assert!(eigen_ck(&Partition::empty()).unwrap().ck.is_empty());
    let e1 = eigen_ck(&p(&[1])).unwrap();
    assert_eq!(e1.ck, vec![RatQT::q() - RatQT::one()]);
    for mu in partitions_up_to(4, 4) {
        let e = eigen_ck(&mu).unwrap();
        assert_eq!(e.ck.len(), mu.len());
        let mut sum = USeries::constant(RatQT::one());
        for (k, c) in e.ck.iter().enumerate() {
            sum = sum.plus(&USeries::new(vec![c.clone()], (0..=k as i64).collect()));
        }
        assert_eq!(sum, eigenvalue(&mu), "{mu}");
    }
}

#[test]
fn hierarchy_on_interpolation_functions() {
    assert!(apply_ak(1, &SymFuncP::one()).unwrap().is_zero());
    assert!(apply_ak(2, &SymFuncP::p_n(1)).unwrap().is_zero());
    let i1 = interp_func(&p(&[1])).unwrap();
    assert_eq!(
        i1,
        SymFuncP::p_n(1).sub(&SymFuncP::constant(RatQT::one() / one_minus_monomial(0, 1)))
    );
    for mu in partitions_up_to(3, 3) {
        let i = interp_func(&mu).unwrap();
        let e = eigen_ck(&mu).unwrap();
        for k in 1..=mu.size().max(1) {
            assert_eq!(apply_ak(k, &i).unwrap(), i.scale(&e.coefficient(k)), "{mu}, k = {k}");
        }
        let a = apply_ainfty(&i).unwrap();
        let expect = USeries::scalar_times(&eigenvalue_numerator(&mu), (0..mu.len() as i64).collect(), &i);
        assert_eq!(a, expect, "{mu}");
    }
}

#[test]
fn intertwining_with_finite_operators() {
    let f = interp_func(&p(&[2]))
        .unwrap()
        .add(&SymFuncP::p_n(1).mul(&SymFuncP::p_n(1)));
    let n = 3;
    let map = PiMap::new(PiVariant::Interp, n);
    let lhs = apply_ainfty(&f).unwrap().map(|g| apply_pi(&map, g));
    let rhs = apply_an(&apply_pi(&map, &f), n).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn hierarchy_commutes_and_top_degree() {
    let f = SymFuncP::p_n(3).add(&SymFuncP::p(p(&[2, 1]))).add(&SymFuncP::p_n(1));
    let ab = apply_ak(1, &apply_ak(2, &f).unwrap()).unwrap();
    let ba = apply_ak(2, &apply_ak(1, &f).unwrap()).unwrap();
    assert_eq!(ab, ba);
    for lam in partitions_up_to(3, 3) {
        let m = macdonald_func(&lam);
        let e = eigen_ck(&lam).unwrap();
        for k in 1..=lam.len() {
            let top = apply_ak(k, &m).unwrap().component(lam.size());
            assert_eq!(top, m.scale(&e.coefficient(k)), "{lam}, k = {k}");
        }
    }
}

#[test]
fn vertex_form() {
    assert!(vertex_a1(&SymFuncP::one()).unwrap().is_zero());
    let p1 = vertex_a1(&SymFuncP::p_n(1)).unwrap();
    let expect = SymFuncP::p_n(1)
        .scale(&(RatQT::q() - RatQT::one()))
        .add(&SymFuncP::constant(one_minus_monomial(1, 0) / one_minus_monomial(0, 1)));
    assert_eq!(p1, expect);
    for f in [
        SymFuncP::p_n(2),
        SymFuncP::p(p(&[1, 1])),
        SymFuncP::p(p(&[2, 1])),
        SymFuncP::p_n(3),
    ] {
        vertex_a1(&f).unwrap();
    }
}

#[test]
fn series_arithmetic() {
    let a = USeries::new(vec![RatQT::one()], vec![0]);
    let b = USeries::new(vec![RatQT::one(), RatQT::t().neg()], vec![0, 1]);
    assert_eq!(a, b);
    let tay = a.taylor(3);
    assert!(tay.iter().all(|c| c.is_one()));
    let sum = a.plus(&USeries::new(vec![RatQT::one()], vec![1]));
    assert_eq!(sum.den_factors, vec![0, 1]);
    assert!(sum.first_difference(&a).is_some());
}
