//! Acceptance suite: one line per criterion with its outcome, time and bound.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qtsym_core::identities::*;
use qtsym_core::partitions::{partitions_up_to, Partition};
use qtsym_core::symfunc::SymFuncP;

struct Criterion {
    id: usize,
    title: &'static str,
    bound: Duration,
    run: fn() -> Vec<CheckReport>,
}

fn lams(d: usize, max_len: usize) -> Vec<Partition> {
    partitions_up_to(d, max_len)
}

fn symmetrization() -> Vec<CheckReport> {
    (1..=5).map(check_symmetrization).collect()
}

fn stability() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for lam in lams(4, 4) {
        for n in 1..=4 {
            out.push(check_hl_stability(&lam, n));
            out.push(check_f_stability(&lam, n));
        }
    }
    out
}

fn interpolation() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for lam in lams(4, n) {
            out.push(check_interpolation(&lam, n));
        }
    }
    out
}

fn eigenrelations() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for mu in lams(4, n) {
            out.push(check_eigenrelations(&mu, n));
            out.push(check_hn_eigen(&mu, n));
        }
    }
    out
}

fn main_theorem() -> Vec<CheckReport> {
    lams(4, 4).iter().map(check_main_theorem).collect()
}

fn intertwining() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for mu in lams(3, 3) {
            out.push(check_intertwining(&mu, n));
        }
    }
    out
}

fn refined_cauchy() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (n, d) in [(1, 3), (2, 3), (3, 2)] {
        for variant in CauchyVariant::ALL {
            out.push(check_refined_cauchy(n, 2, d, variant));
        }
    }
    out
}

fn technical_lemma() -> Vec<CheckReport> {
    (1..=4).map(check_lemma_technical).collect()
}

fn wzj() -> Vec<CheckReport> {
    (1..=2).map(check_wzj_equality).collect()
}

fn routes() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for lam in lams(4, n) {
            out.push(check_routes(&lam, n));
            out.push(check_q0_limit(&lam, n));
            out.push(check_tau_support(&lam, n));
        }
    }
    out
}

fn degeneration_lemmas() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for lam in lams(4, n) {
            out.push(check_lemma_limit_norm(&lam, n));
            out.push(check_lemma_limit_at_zeros(&lam, n));
            out.push(check_lemma_limit_at_lambda(&lam, n));
        }
    }
    out
}

fn generating() -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = (1..=4).map(|n| check_generating(GeneratingKind::E, n, 0)).collect();
    out.extend((1..=3).map(|n| check_generating(GeneratingKind::H, n, 6)));
    out.push(check_generating_lambda(4));
    out
}

fn vertex() -> Vec<CheckReport> {
    lams(4, 4)
        .into_iter()
        .map(|mu| check_vertex(&SymFuncP::p(mu)))
        .collect()
}

fn kernel_and_commutativity() -> Vec<CheckReport> {
    let p11 = SymFuncP::p(Partition::new(vec![1, 1]).unwrap());
    let mut out: Vec<CheckReport> = [SymFuncP::p_n(1), SymFuncP::p_n(2), p11]
        .iter()
        .map(|f| check_adjoint_kernel(3, f))
        .collect();
    out.push(check_commutativity(4));
    out
}

const CRITERIA: [Criterion; 14] = [
    Criterion {
        id: 1,
        title: "symmetrization identity, N = 1..5",
        bound: Duration::from_secs(1),
        run: symmetrization,
    },
    Criterion {
        id: 2,
        title: "HL and F stability, |λ| ≤ 4, N ≤ 4",
        bound: Duration::from_secs(10),
        run: stability,
    },
    Criterion {
        id: 3,
        title: "interpolation characterization, |λ| ≤ 4, N ≤ 3",
        bound: Duration::from_secs(300),
        run: interpolation,
    },
    Criterion {
        id: 4,
        title: "eigenrelations of D_N and A_N, |μ| ≤ 4, N ≤ 3",
        bound: Duration::from_secs(300),
        run: eigenrelations,
    },
    Criterion {
        id: 5,
        title: "hierarchy eigenvalues on I_μ, |μ| ≤ 4",
        bound: Duration::from_secs(600),
        run: main_theorem,
    },
    Criterion {
        id: 6,
        title: "intertwining on I_μ, |μ| ≤ 3, N = 2, 3",
        bound: Duration::from_secs(300),
        run: intertwining,
    },
    Criterion {
        id: 7,
        title: "refined Cauchy identity and corollaries",
        bound: Duration::from_secs(600),
        run: refined_cauchy,
    },
    Criterion {
        id: 8,
        title: "technical lemma, K = 1..4",
        bound: Duration::from_secs(10),
        run: technical_lemma,
    },
    Criterion {
        id: 9,
        title: "determinant equality, N = 1, 2",
        bound: Duration::from_secs(120),
        run: wzj,
    },
    Criterion {
        id: 10,
        title: "F routes, q → 0 limit, τ support, |λ| ≤ 4, N ≤ 4",
        bound: Duration::from_secs(600),
        run: routes,
    },
    Criterion {
        id: 11,
        title: "degeneration limits, |λ| ≤ 4, N ≤ 3",
        bound: Duration::from_secs(300),
        run: degeneration_lemmas,
    },
    Criterion {
        id: 12,
        title: "generating functions for E and H",
        bound: Duration::from_secs(120),
        run: generating,
    },
    Criterion {
        id: 13,
        title: "vertex operator form of A^1, degree ≤ 4",
        bound: Duration::from_secs(120),
        run: vertex,
    },
    Criterion {
        id: 14,
        title: "adjoint kernel and commutativity",
        bound: Duration::from_secs(300),
        run: kernel_and_commutativity,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let reports = (c.run)();
        let elapsed = start.elapsed();
        let bad: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
        let in_time = elapsed <= c.bound;
        let ok = bad.is_empty() && in_time;
        println!(
            "criterion {:>2}: {} {} ({} checks, {:.2}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            reports.len(),
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        for r in bad.iter().take(5) {
            println!("    {r}");
        }
        if !in_time {
            println!("    time bound exceeded");
        }
        if !ok {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
