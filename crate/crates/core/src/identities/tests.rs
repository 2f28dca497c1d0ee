use super::*;
use crate::partitions::{partitions_up_to, Partition};
use crate::symfunc::SymFuncP;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn assert_pass(r: CheckReport) {
    assert!(r.passed(), "{r}");
    assert!(r.witness.is_none());
}

#[test]
fn technical_lemma() {
    for k in 1..=4 {
        assert_pass(check_lemma_technical(k));
    }
}

#[test]
fn refined_cauchy_small() {
    for variant in CauchyVariant::ALL {
        assert_pass(check_refined_cauchy(1, 1, 2, variant));
        assert_pass(check_refined_cauchy(1, 2, 0, variant));
        assert_pass(check_refined_cauchy(2, 2, 3, variant));
    }
}

#[test]
fn wzj_and_hl_cauchy() {
    assert_pass(check_wzj_equality(1));
    assert_pass(check_wzj_equality(2));
    for d in 0..=3 {
        assert_pass(check_cauchy_hl(2, 2, d));
    }
    assert_pass(check_cauchy_hl(1, 3, 2));
}

#[test]
fn adjoint_kernel() {
    assert_pass(check_adjoint_kernel(2, &SymFuncP::one()));
    assert_pass(check_adjoint_kernel(2, &SymFuncP::p_n(1)));
    assert_pass(check_adjoint_kernel(3, &SymFuncP::p_n(2)));
}

#[test]
fn generating_functions() {
    for n in 1..=3 {
        assert_pass(check_generating(GeneratingKind::E, n, 0));
    }
    assert_pass(check_generating(GeneratingKind::H, 1, 0));
    assert_pass(check_generating(GeneratingKind::H, 2, 3));
    assert_pass(check_generating_lambda(3));
    assert_eq!("h".parse::<GeneratingKind>().unwrap(), GeneratingKind::H);
}

#[test]
fn structural_small() {
    for n in 1..=4 {
        assert_pass(check_symmetrization(n));
    }
    for lam in partitions_up_to(3, 3) {
        for n in 1..=3 {
            assert_pass(check_hl_stability(&lam, n));
            assert_pass(check_f_stability(&lam, n));
        }
    }
    for lam in partitions_up_to(2, 2) {
        assert_pass(check_interpolation(&lam, 2));
        assert_pass(check_hn_eigen(&lam, 2));
        assert_pass(check_eigenrelations(&lam, 2));
        assert_pass(check_main_theorem(&lam));
        assert_pass(check_intertwining(&lam, 2));
    }
    assert_pass(check_vertex(&SymFuncP::p(p(&[2, 1]))));
    assert_pass(check_commutativity(3));
}

#[test]
fn degenerations_small() {
    for lam in partitions_up_to(3, 3) {
        for n in lam.len().max(1)..=3 {
            assert_pass(check_routes(&lam, n));
            assert_pass(check_q0_limit(&lam, n));
            assert_pass(check_tau_support(&lam, n));
            assert_pass(check_lemma_limit_norm(&lam, n));
            assert_pass(check_lemma_limit_at_zeros(&lam, n));
            assert_pass(check_lemma_limit_at_lambda(&lam, n));
        }
    }
}

#[test]
fn failure_carries_witness() {
    let r = run_check("probe", Params::new().with("x", 1), || {
        Ok::<_, String>(Some(Witness::new("x^2", 1, 2)))
    });
    assert_eq!(r.status, Status::Fail);
    assert!(r.to_string().contains("x^2"));
    let e = run_check("probe", Params::new(), || Err::<Option<Witness>, _>("boom".to_string()));
    assert!(!e.passed());
    assert_eq!(e.witness.unwrap().lhs, "boom");
}

#[test]
fn reports_are_deterministic_and_serialize() {
    let a = run_suite(Suite::Generating, 2, 2);
    let b = run_suite(Suite::Generating, 2, 2);
    assert_eq!(a.len(), b.len());
    assert!(a.iter().zip(&b).all(|(x, y)| x.same_outcome(y)));
    assert!(a.iter().all(CheckReport::passed));
    let text = serde_json::to_string(&a).unwrap();
    let back: Vec<CheckReport> = serde_json::from_str(&text).unwrap();
    assert!(back.iter().zip(&a).all(|(x, y)| x.same_outcome(y)));
    assert!(text.contains("\"status\":\"pass\""));
    assert_eq!("Cauchy".parse::<Suite>().unwrap(), Suite::Cauchy);
}
