use super::witness::{self, Witness};
use super::{run_check, CheckReport, Params};
use crate::bases::{
    hl_p, inhom_f, inhom_f_all_routes, interp_macdonald, interp_value, limit_q0_interp, BasisError, FRoute,
};
use crate::partitions::{subpartitions, t_binomial, tau_coeff, Partition};
use crate::polyengine::MPoly;
use crate::scalar::RatQT;

/// The four constructions of `F_λ` agree.
pub fn check_routes(lambda: &Partition, n: usize) -> CheckReport {
    run_check(
        "routes",
        Params::new().with("lambda", lambda).with("N", n),
        || match inhom_f_all_routes(lambda, n) {
            Ok(_) => Ok(None),
            Err(BasisError::RouteMismatch {
                first,
                second,
                first_value,
                second_value,
                ..
            }) => Ok(Some(Witness::new(
                format!("{first} vs {second}"),
                first_value,
                second_value,
            ))),
            Err(e) => Err(e),
        },
    )
}

/// `lim_{q→0} I_{λ|N}(x; 1/q, 1/t) = F_λ(x; t)`.
pub fn check_q0_limit(lambda: &Partition, n: usize) -> CheckReport {
    run_check("q0_limit", Params::new().with("lambda", lambda).with("N", n), || {
        let lim = limit_q0_interp(lambda, n)?;
        Ok::<_, BasisError>(witness::polys(&lim, &inhom_f(lambda, n, FRoute::Definition)?))
    })
}

/// `F_λ = Σ_μ τ_{λ/μ} P_μ` with the sum restricted to vertical strips `λ/μ`,
/// and `τ_{λ/μ} = 0` for every other `μ ⊆ λ`.
pub fn check_tau_support(lambda: &Partition, n: usize) -> CheckReport {
    run_check("tau_support", Params::new().with("lambda", lambda).with("N", n), || {
        let f = inhom_f(lambda, n, FRoute::Definition)?;
        let mut sum = MPoly::zero(f.spec());
        for mu in subpartitions(lambda) {
            let tau = tau_coeff(lambda, &mu, n);
            if lambda.is_vertical_strip_over(&mu) {
                if mu.len() <= n {
                    sum.add_scaled(&hl_p(&mu, n), &tau);
                }
            } else if !tau.is_zero() {
                return Ok(Some(Witness::new(format!("tau {lambda}/{mu}"), tau, 0)));
            }
        }
        Ok::<_, BasisError>(witness::polys(&sum, &f))
    })
}

fn limit_at_q0(v: RatQT, what: &str) -> Result<RatQT, String> {
    v.eval_q0().map_err(|_| format!("pole at q = 0 in {what}"))
}

/// `q^{2n(λ')+|λ|} I_λ(λ) → t^{n(λ)}` as `q → 0`.
pub fn check_lemma_limit_norm(lambda: &Partition, n: usize) -> CheckReport {
    run_check(
        "lemma_limit_norm",
        Params::new().with("lambda", lambda).with("N", n),
        || {
            let v = interp_value(lambda, lambda, n).map_err(|e| e.to_string())?;
            let e = 2 * lambda.conjugate().n() + lambda.size();
            let lim = limit_at_q0(RatQT::q_pow(e as i64) * v, "I_λ(λ)")?;
            Ok::<_, String>(witness::scalars(&lim, &RatQT::t_pow(lambda.n() as i64)))
        },
    )
}

/// `q^{-n(λ')} I_λ(0^N; 1/q, 1/t) → (-t^{1-N})^{|λ|} [N, λ'_1]_t Π_i [λ'_i, λ'_{i+1}]_t` as `q → 0`.
pub fn check_lemma_limit_at_zeros(lambda: &Partition, n: usize) -> CheckReport {
    run_check(
        "lemma_limit_at_zeros",
        Params::new().with("lambda", lambda).with("N", n),
        || {
            let c = interp_macdonald(lambda, n).map_err(|e| e.to_string())?.constant_term();
            let inverted = c.subst_q_inv().subst_t_inv();
            let lim = limit_at_q0(RatQT::q_pow(-(lambda.conjugate().n() as i64)) * inverted, "I_λ(0^N)")?;
            let lc = lambda.conjugate();
            let col = |i: usize| lc.part(i) as i64;
            let mut rhs = RatQT::from_poly(t_binomial(n as i64, col(1)));
            for i in 1..=lambda.part(1) {
                rhs = rhs * RatQT::from_poly(t_binomial(col(i), col(i + 1)));
            }
            let s = lambda.size() as i64;
            rhs = rhs * RatQT::t_pow((1 - n as i64) * s) * RatQT::from_int(if s % 2 == 1 { -1 } else { 1 });
            Ok::<_, String>(witness::scalars(&lim, &rhs))
        },
    )
}

/// For every `μ ⊆ λ`: `q^{n(μ')+n(λ')+|μ|} I_μ(λ) → t^{n(μ)} Π_i [λ'_i - λ'_{i+1}, λ'_i - μ'_i]_t`
/// as `q → 0`, which vanishes unless `λ/μ` is a vertical strip.
pub fn check_lemma_limit_at_lambda(lambda: &Partition, n: usize) -> CheckReport {
    run_check(
        "lemma_limit_at_lambda",
        Params::new().with("lambda", lambda).with("N", n),
        || {
            let lc = lambda.conjugate();
            for mu in subpartitions(lambda) {
                let v = interp_value(&mu, lambda, n).map_err(|e| e.to_string())?;
                let e = mu.conjugate().n() + lc.n() + mu.size();
                let lim = limit_at_q0(RatQT::q_pow(e as i64) * v, "I_μ(λ)")?;
                let mc = mu.conjugate();
                let mut rhs = RatQT::t_pow(mu.n() as i64);
                for i in 1..=lambda.part(1) {
                    let (li, lj, mi) = (lc.part(i) as i64, lc.part(i + 1) as i64, mc.part(i) as i64);
                    rhs = rhs * RatQT::from_poly(t_binomial(li - lj, li - mi));
                }
                if !lambda.is_vertical_strip_over(&mu) && !rhs.is_zero() {
                    return Ok(Some(Witness::new(format!("closed form at {mu}"), rhs, 0)));
                }
                if let Some(w) = witness::scalars(&lim, &rhs) {
                    return Ok(Some(Witness {
                        monomial: format!("mu = {mu}"),
                        ..w
                    }));
                }
            }
            Ok::<_, String>(None)
        },
    )
}
