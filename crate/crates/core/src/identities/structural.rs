use super::witness::{self, Witness};
use super::{run_check, CheckReport, Params};
use crate::bases::{
    hl_p, inhom_f, interp_func, interp_macdonald, macdonald_poly, partition_point, special_values, x_spec, FRoute,
    SpecialValue,
};
use crate::operators::{
    apply_ainfty, apply_ak, apply_an, apply_dn, apply_hn, eigen_ck, eigenvalue_numerator, vertex_a1, OperatorError,
    USeries,
};
use crate::partitions::{partitions_up_to, Partition};
use crate::polyengine::{permutations_with_sign, vandermonde, Group, MPoly};
use crate::scalar::{one_minus_monomial, RatQT};
use crate::symfunc::{apply_pi, PiMap, PiVariant, SymFuncP};

fn labelled(label: String, w: Option<Witness>) -> Option<Witness> {
    w.map(|w| Witness {
        monomial: format!("{label}: {}", w.monomial),
        ..w
    })
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

/// `Σ_{w ∈ S_N} w(Π_{i<j} (x_i - t x_j)/(x_i - x_j)) = Π_{i=1}^N (1 - t^i)/(1 - t)`,
/// computed as the antisymmetrization of the numerator divided by `V(x)`.
pub fn check_symmetrization(n: usize) -> CheckReport {
    run_check("symmetrization", Params::new().with("N", n), || {
        let spec = x_spec(n);
        let mut num = MPoly::one(&spec);
        for i in 0..n {
            for j in i + 1..n {
                let xj = MPoly::var(&spec, Group::X, j).scale(&RatQT::t());
                num = num.mul(&MPoly::var(&spec, Group::X, i).sub(&xj));
            }
        }
        let mut alt = MPoly::zero(&spec);
        for (perm, odd) in permutations_with_sign(n) {
            let term = num.permute(Group::X, &perm);
            alt = if odd { alt.sub(&term) } else { alt.add(&term) };
        }
        let lhs = alt.exact_divide(&vandermonde(&spec))?;
        let mut rhs = RatQT::one();
        for i in 1..=n as i64 {
            rhs = rhs * one_minus_monomial(0, i) / one_minus_monomial(0, 1);
        }
        Ok::<_, OperatorError>(witness::polys(&lhs, &MPoly::constant(&spec, rhs)))
    })
}

/// `P_λ(x_1..x_N, 0) = P_λ(x_1..x_N)`, both sides zero when `ℓ(λ) > N`.
pub fn check_hl_stability(lambda: &Partition, n: usize) -> CheckReport {
    run_check(
        "hl_stability",
        Params::new().with("lambda", lambda).with("N", n),
        || {
            let big = hl_p(lambda, n + 1).set_zero(Group::X, n);
            let small = hl_p(lambda, n).embed(&x_spec(n + 1))?;
            let mut w = witness::polys(&big, &small);
            if w.is_none() && lambda.len() > n + 1 && !big.is_zero() {
                w = Some(Witness::new("1", &big, 0));
            }
            Ok::<_, OperatorError>(w)
        },
    )
}

/// `F_λ(x_1..x_N, t^{-N}) = F_λ(x_1..x_N)`, both sides zero when `ℓ(λ) > N`.
pub fn check_f_stability(lambda: &Partition, n: usize) -> CheckReport {
    run_check("f_stability", Params::new().with("lambda", lambda).with("N", n), || {
        let big =
            inhom_f(lambda, n + 1, FRoute::Definition)?.substitute_scalar(Group::X, n, &RatQT::t_pow(-(n as i64)));
        let small = inhom_f(lambda, n, FRoute::Definition)?.embed(&x_spec(n + 1))?;
        let mut w = witness::polys(&big, &small);
        if w.is_none() && lambda.len() > n && !small.is_zero() {
            w = Some(Witness::new("1", &small, 0));
        }
        Ok::<_, OperatorError>(w)
    })
}

/// The vanishing characterization of `I_{λ|N}`: symmetric, degree `|λ|`, zero at
/// every other point of size at most `|λ|`, top part the Macdonald polynomial;
/// plus the value at its own point, the value at `0^N` and stability in `N`.
pub fn check_interpolation(lambda: &Partition, n: usize) -> CheckReport {
    run_check(
        "interpolation",
        Params::new().with("lambda", lambda).with("N", n),
        || {
            let i = interp_macdonald(lambda, n)?;
            if !i.is_symmetric_in(Group::X) {
                return Ok(Some(Witness::new("symmetry", &i, "symmetric")));
            }
            let d = lambda.size() as u16;
            if i.degree_in(Group::X) > d {
                return Ok(Some(Witness::new("degree", i.degree_in(Group::X), d)));
            }
            for nu in partitions_up_to(lambda.size(), n) {
                let v = i.eval_x(&partition_point(&nu, n));
                let expect = if &nu == lambda {
                    special_values(lambda, n, &SpecialValue::CNorm)
                } else {
                    RatQT::zero()
                };
                if let Some(w) = labelled(format!("value at {nu}"), witness::scalars(&v, &expect)) {
                    return Ok(Some(w));
                }
            }
            let zero = vec![RatQT::zero(); n];
            let at0 = special_values(lambda, n, &SpecialValue::AtZeros);
            if let Some(w) = labelled("value at 0^N".into(), witness::scalars(&i.eval_x(&zero), &at0)) {
                return Ok(Some(w));
            }
            let top = i.map_monomials(|m| (m.group_degree(i.spec(), 0) == d).then(|| (m.clone(), RatQT::one())));
            if let Some(w) = labelled("top degree".into(), witness::polys(&top, &macdonald_poly(lambda, n))) {
                return Ok(Some(w));
            }
            let up = interp_macdonald(lambda, n + 1)?.substitute_scalar(Group::X, n, &RatQT::t_pow(n as i64));
            let w = witness::polys(&up, &i.embed(&x_spec(n + 1))?);
            Ok::<_, OperatorError>(labelled("stability".into(), w))
        },
    )
}

/// `H_N^r M_λ = e_r(q^{λ_i} t^{N-i}) M_λ` for `r = 0..N`.
pub fn check_hn_eigen(lambda: &Partition, n: usize) -> CheckReport {
    run_check("hn_eigen", Params::new().with("lambda", lambda).with("N", n), || {
        let m = macdonald_poly(lambda, n);
        let vals: Vec<RatQT> = lambda
            .padded(n)
            .iter()
            .enumerate()
            .map(|(i, &l)| RatQT::monomial(l as i64, (n - 1 - i) as i64))
            .collect();
        for r in 0..=n {
            let w = witness::polys(&apply_hn(r, &m, n)?, &m.scale(&elementary(&vals, r)));
            if w.is_some() {
                return Ok(labelled(format!("r = {r}"), w));
            }
        }
        Ok::<_, OperatorError>(None)
    })
}

/// `D_N(z) I_μ = Π_i (1 + z q^{μ_i} t^{1-i}) I_μ` and `A_N(u) I_μ = eigenvalue(μ; u) I_μ`.
pub fn check_eigenrelations(mu: &Partition, n: usize) -> CheckReport {
    run_check("eigenrelations", Params::new().with("mu", mu).with("N", n), || {
        let i = interp_macdonald(mu, n)?;
        let d = apply_dn(&i, n)?;
        let vals: Vec<RatQT> = mu
            .padded(n)
            .iter()
            .enumerate()
            .map(|(k, &m)| RatQT::monomial(m as i64, -(k as i64)))
            .collect();
        for k in 0..=n {
            let w = witness::polys(&d.num[k], &i.scale(&elementary(&vals, k)));
            if w.is_some() {
                return Ok(labelled(format!("D_N, z^{k}"), w));
            }
        }
        let a = apply_an(&i, n)?;
        let expect = USeries::scalar_times(&eigenvalue_numerator(mu), (0..mu.len() as i64).collect(), &i);
        Ok::<_, OperatorError>(labelled("A_N".into(), witness::poly_series(&a, &expect)))
    })
}

/// `A^k I_μ = c_k(μ) I_μ` for `1 ≤ k ≤ max(|μ|, 1)`, and `A_∞(u) I_μ = eigenvalue(μ; u) I_μ`.
pub fn check_main_theorem(mu: &Partition) -> CheckReport {
    run_check("main_theorem", Params::new().with("mu", mu), || {
        let i = interp_func(mu)?;
        let e = eigen_ck(mu)?;
        for k in 1..=mu.size().max(1) {
            let w = witness::funcs(&apply_ak(k, &i)?, &i.scale(&e.coefficient(k)));
            if w.is_some() {
                return Ok(labelled(format!("k = {k}"), w));
            }
        }
        let a = apply_ainfty(&i)?;
        let expect = USeries::scalar_times(&eigenvalue_numerator(mu), (0..mu.len() as i64).collect(), &i);
        Ok::<_, OperatorError>(labelled("A_inf".into(), witness::func_series(&a, &expect)))
    })
}

/// `π_N ∘ A_∞(u) = A_N(u) ∘ π_N` on `I_μ`.
pub fn check_intertwining(mu: &Partition, n: usize) -> CheckReport {
    run_check("intertwining", Params::new().with("mu", mu).with("N", n), || {
        let f = interp_func(mu)?;
        let map = PiMap::new(PiVariant::Interp, n);
        let lhs = apply_ainfty(&f)?.map(|g| apply_pi(&map, g));
        let rhs = apply_an(&apply_pi(&map, &f), n)?;
        Ok::<_, OperatorError>(witness::poly_series(&lhs, &rhs))
    })
}

/// The vertex operator form of `A^1` agrees with the hierarchy formula on `f`.
pub fn check_vertex(f: &SymFuncP) -> CheckReport {
    run_check("vertex", Params::new().with("f", f.to_string()), || {
        match vertex_a1(f) {
            Ok(v) => Ok(witness::funcs(&v, &apply_ak(1, f)?)),
            Err(OperatorError::VertexMismatch { vertex, hierarchy }) => {
                Ok(Some(Witness::new("A^1 f", vertex, hierarchy)))
            }
            Err(e) => Err(e),
        }
    })
}

/// `A^1 A^2 = A^2 A^1` on every power-sum monomial of degree at most `max_deg`.
pub fn check_commutativity(max_deg: usize) -> CheckReport {
    run_check("commutativity", Params::new().with("max_deg", max_deg), || {
        for mu in partitions_up_to(max_deg, max_deg.max(1)) {
            let f = SymFuncP::p(mu.clone());
            let ab = apply_ak(1, &apply_ak(2, &f)?)?;
            let ba = apply_ak(2, &apply_ak(1, &f)?)?;
            if let Some(w) = labelled(format!("p{mu}"), witness::funcs(&ab, &ba)) {
                return Ok(Some(w));
            }
        }
        Ok::<_, OperatorError>(None)
    })
}
