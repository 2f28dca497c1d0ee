//! Executable checks of the identities relating the polynomial families and
//! operators, each returning a [`CheckReport`].

mod cauchy;
mod degenerations;
mod generating;
mod structural;
mod witness;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use cauchy::{
    check_adjoint_kernel, check_cauchy_hl, check_lemma_technical, check_refined_cauchy, check_wzj_equality,
    CauchyVariant,
};
pub use degenerations::{
    check_lemma_limit_at_lambda, check_lemma_limit_at_zeros, check_lemma_limit_norm, check_q0_limit, check_routes,
    check_tau_support,
};
pub use generating::{check_generating, check_generating_lambda, GeneratingKind};
pub use structural::{
    check_commutativity, check_eigenrelations, check_f_stability, check_hl_stability, check_hn_eigen,
    check_interpolation, check_intertwining, check_main_theorem, check_symmetrization, check_vertex,
};
pub use witness::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one check at one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(with = "seconds")]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Same outcome ignoring timing.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.name == other.name
            && self.parameters == other.parameters
            && self.status == other.status
            && self.witness == other.witness
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{} [{}] {} ({:.3}s)",
            self.name,
            params.join(", "),
            if self.passed() { "pass" } else { "fail" },
            self.elapsed.as_secs_f64()
        )?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

mod seconds {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Ok(Duration::from_secs_f64(secs.max(0.0)))
    }
}

/// Parameters of a check, in insertion-independent order.
pub(crate) struct Params(BTreeMap<String, Value>);

impl Params {
    pub(crate) fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub(crate) fn with(mut self, key: &str, v: impl Serialize) -> Self {
        self.0.insert(
            key.to_string(),
            serde_json::to_value(v).expect("serializable parameter"),
        );
        self
    }
}

/// Run a check body: `Ok(None)` is a pass, `Ok(Some(w))` a failure with witness,
/// and an error a failure whose witness carries the message.
pub(crate) fn run_check<E: fmt::Display>(
    name: &str,
    params: Params,
    body: impl FnOnce() -> Result<Option<Witness>, E>,
) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let witness = match outcome {
        Ok(w) => w,
        Err(e) => Some(Witness::error(e.to_string())),
    };
    CheckReport {
        name: name.to_string(),
        parameters: params.0,
        status: if witness.is_none() { Status::Pass } else { Status::Fail },
        witness,
        elapsed,
    }
}

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Cauchy,
    Operators,
    Degenerations,
    Generating,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "cauchy" => Ok(Suite::Cauchy),
            "operators" => Ok(Suite::Operators),
            "degenerations" => Ok(Suite::Degenerations),
            "generating" => Ok(Suite::Generating),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

/// Run a suite at the given size caps. Reports come back in a fixed order.
pub fn run_suite(suite: Suite, max_n: usize, max_deg: usize) -> Vec<CheckReport> {
    use crate::partitions::{partitions_up_to, Partition};
    use crate::symfunc::SymFuncP;

    let mut out = Vec::new();
    let all = suite == Suite::All;
    let parts = |d: usize| partitions_up_to(d, d.max(1));
    if all {
        for n in 1..=max_n.max(1) {
            out.push(check_symmetrization(n));
        }
        for lam in partitions_up_to(max_deg, max_n) {
            for n in 1..=max_n {
                if lam.len() <= n {
                    out.push(check_interpolation(&lam, n));
                }
            }
        }
    }
    if all || suite == Suite::Cauchy {
        for k in 1..=max_n.clamp(1, 5) {
            out.push(check_lemma_technical(k));
        }
        for n in 1..=max_n.min(3) {
            let d = if n >= 3 { max_deg.min(2) } else { max_deg.min(3) };
            for variant in CauchyVariant::ALL {
                out.push(check_refined_cauchy(n, 2, d, variant));
            }
        }
        for n in 1..=max_n.min(2) {
            out.push(check_wzj_equality(n));
        }
        out.push(check_cauchy_hl(2, 2, max_deg.min(3)));
        for f in [
            SymFuncP::p_n(1),
            SymFuncP::p_n(2),
            SymFuncP::p(Partition::from_unsorted(vec![1, 1])),
        ] {
            if f.degree() <= max_deg.min(3) {
                out.push(check_adjoint_kernel(max_deg.min(3), &f));
            }
        }
    }
    if all || suite == Suite::Operators {
        for n in 1..=max_n.min(3) {
            for lam in partitions_up_to(max_deg.min(3), n) {
                out.push(check_hn_eigen(&lam, n));
            }
            for mu in partitions_up_to(max_deg.min(4), n) {
                out.push(check_eigenrelations(&mu, n));
            }
        }
        for mu in partitions_up_to(max_deg.min(4), max_deg.min(4)) {
            out.push(check_main_theorem(&mu));
        }
        for n in 2..=max_n.clamp(2, 3) {
            for mu in partitions_up_to(max_deg.min(3), n) {
                out.push(check_intertwining(&mu, n));
            }
        }
        for d in 0..=max_deg.min(4) {
            for mu in parts(d).into_iter().filter(|m| m.size() == d) {
                out.push(check_vertex(&SymFuncP::p(mu)));
            }
        }
        out.push(check_commutativity(max_deg.min(4)));
    }
    if all || suite == Suite::Degenerations {
        for lam in partitions_up_to(max_deg, max_n.max(1)) {
            for n in 1..=max_n.max(1) {
                out.push(check_hl_stability(&lam, n));
                out.push(check_f_stability(&lam, n));
                if lam.len() <= n {
                    out.push(check_routes(&lam, n));
                    out.push(check_q0_limit(&lam, n));
                    out.push(check_tau_support(&lam, n));
                }
            }
        }
        for lam in partitions_up_to(max_deg, max_n.min(3)) {
            for n in lam.len().max(1)..=max_n.min(3) {
                out.push(check_lemma_limit_norm(&lam, n));
                out.push(check_lemma_limit_at_zeros(&lam, n));
                out.push(check_lemma_limit_at_lambda(&lam, n));
            }
        }
    }
    if all || suite == Suite::Generating {
        for n in 1..=max_n.min(4) {
            out.push(check_generating(GeneratingKind::E, n, 0));
        }
        for n in 1..=max_n.min(3) {
            out.push(check_generating(GeneratingKind::H, n, max_deg.min(6)));
        }
        out.push(check_generating_lambda(max_deg.min(4)));
    }
    out
}

#[cfg(test)]
mod tests;
